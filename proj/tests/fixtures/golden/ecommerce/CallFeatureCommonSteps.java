// GENERATED — do not edit
@And("I call feature file {Common}")
public void callFeatureCommonObject(Common enumObject) {
    CALL_RUNTIME(enumObject);
};
