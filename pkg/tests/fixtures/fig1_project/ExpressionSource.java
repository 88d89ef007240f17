public class ExpressionSource {

    private static final String DEFAULT_ARGUMENT_MAP_NAME = "args";

    public String[] getArgumentNames(Method method) {
        return null;
    }

    public String getArgumentMapName(Method method) {
        return DEFAULT_ARGUMENT_MAP_NAME;
    }
}
