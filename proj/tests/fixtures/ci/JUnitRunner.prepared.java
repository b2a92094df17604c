@RunWith(Cucumber.class)
@CucumberOptions(features = {
    "features/checkout" }, glue = {
    "PathToStepDefinitionsJavaDirectory" }, plugin = { "html:target/cucumber-html-report",
    "json:target/cucumber.json",
    "pretty:target/cucumber-pretty.txt",
    "junit:target/test-results.xml" }, dryRun = false, tags = { "@FeatureX" })
public class TestRunner {

    @BeforeClass
    public static void setup() throws Exception {
        // Method contents omitted
    }

    @AfterClass
    public static void teardown() {
        // Method contents omitted
    }
}
