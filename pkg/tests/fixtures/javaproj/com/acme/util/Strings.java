package com.acme.util;

public final class Strings {
    public static final String EMPTY = "";

    private Strings() {
    }

    public static String join(String left, String right) {
        return left + "-" + right;
    }
}
