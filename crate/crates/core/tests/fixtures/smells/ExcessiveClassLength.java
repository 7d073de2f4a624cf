package com.example.big;

public class Sprawl {
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    // reserved for generated members
    public void touch() {
        System.out.println(1);
    }
}
