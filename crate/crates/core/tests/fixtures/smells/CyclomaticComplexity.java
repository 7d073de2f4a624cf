package com.example.rules;

public class Validator {
    public boolean valid(int[] v) {
        if (v[0] > 0 && v[1] > 0 && v[2] > 0 && v[3] > 0 && v[4] > 0 &&
                v[5] > 0 && v[6] > 0 && v[7] > 0 && v[8] > 0 && v[9] > 0 &&
                v[10] > 0 && v[11] > 0 && v[12] > 0 && v[13] > 0 && v[14] > 0 &&
                v[15] > 0 && v[16] > 0 && v[17] > 0 && v[18] > 0 && v[19] > 0 &&
                v[20] > 0 && v[21] > 0 && v[22] > 0 && v[23] > 0 && v[24] > 0 &&
                v[25] > 0 && v[26] > 0 && v[27] > 0 && v[28] > 0 && v[29] > 0 &&
                v[30] > 0 && v[31] > 0 && v[32] > 0 && v[33] > 0 && v[34] > 0 &&
                v[35] > 0 && v[36] > 0 && v[37] > 0 && v[38] > 0 && v[39] > 0 &&
                v[40] > 0) {
            return true;
        }
        return false;
    }
}
