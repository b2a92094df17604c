// GENERATED — do not edit
public enum Common {
    COMMON_CHECKOUT,
    COMMON_LOGIN
};
