#pragma once

namespace sublat {

/// All isomorphism types of groups of order 1..24 and 27, one per line.
/// Format documented in catalog.hpp.
inline const char* embedded_catalog_text() {
    return
        "1 1 C1 1; ()\n"
        "2 1 C2 2; (0 1)\n"
        "3 1 C3 3; (0 1 2)\n"
        "4 1 C4 4; (0 1 2 3)\n"
        "4 2 C2xC2 4; (0 1); (2 3)\n"
        "5 1 C5 5; (0 1 2 3 4)\n"
        "6 1 C6 5; (0 1); (2 3 4)\n"
        "6 2 S3 3; (0 1 2); (1 2)\n"
        "7 1 C7 7; (0 1 2 3 4 5 6)\n"
        "8 1 C8 8; (0 1 2 3 4 5 6 7)\n"
        "8 2 C2xC4 6; (0 1); (2 3 4 5)\n"
        "8 3 C2xC2xC2 6; (0 1); (2 3); (4 5)\n"
        "8 4 D8 4; (0 1 2 3); (1 3)\n"
        "8 5 Q8 8; (0 2 1 3)(4 6 5 7); (0 4 1 5)(2 7 3 6)\n"
        "9 1 C9 9; (0 1 2 3 4 5 6 7 8)\n"
        "9 2 C3xC3 6; (0 1 2); (3 4 5)\n"
        "10 1 C10 7; (0 1); (2 3 4 5 6)\n"
        "10 2 D10 5; (0 1 2 3 4); (1 4)(2 3)\n"
        "11 1 C11 11; (0 1 2 3 4 5 6 7 8 9 10)\n"
        "12 1 C12 7; (0 1 2 3); (4 5 6)\n"
        "12 2 C2xC6 7; (0 1); (2 3); (4 5 6)\n"
        "12 3 D12 6; (0 1 2 3 4 5); (1 5)(2 4)\n"
        "12 4 A4 4; (0 1 2); (0 1)(2 3)\n"
        "12 5 C4:C3[2] 7; (0 1 2); (1 2)(3 4 5 6)\n"
        "13 1 C13 13; (0 1 2 3 4 5 6 7 8 9 10 11 12)\n"
        "14 1 C14 9; (0 1); (2 3 4 5 6 7 8)\n"
        "14 2 D14 7; (0 1 2 3 4 5 6); (1 6)(2 5)(3 4)\n"
        "15 1 C15 8; (0 1 2); (3 4 5 6 7)\n"
        "16 1 C16 16; (0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)\n"
        "16 2 C2xC8 10; (0 1); (2 3 4 5 6 7 8 9)\n"
        "16 3 C4xC4 8; (0 1 2 3); (4 5 6 7)\n"
        "16 4 C2xC2xC4 8; (0 1); (2 3); (4 5 6 7)\n"
        "16 5 C2xC2xC2xC2 8; (0 1); (2 3); (4 5); (6 7)\n"
        "16 6 D16 8; (0 1 2 3 4 5 6 7); (1 7)(2 6)(3 5)\n"
        "16 7 C2:C8[3] 8; (0 1 2 3 4 5 6 7); (1 3)(2 6)(5 7)\n"
        "16 8 M16 8; (0 1 2 3 4 5 6 7); (1 5)(3 7)\n"
        "16 9 Q16 16; (0 1 8 9)(2 15 10 7)(3 6 11 14)(4 13 12 5); (0 2 4 6 8 10 12 14)(1 3 5 7 9 11 13 15)\n"
        "16 10 D8xC2 6; (0 1 2 3); (1 3); (4 5)\n"
        "16 11 Q8xC2 10; (0 2 1 3)(4 6 5 7); (0 4 1 5)(2 7 3 6); (8 9)\n"
        "16 12 C4:C4[3] 8; (0 1 2 3); (1 3)(4 5 6 7)\n"
        "16 13 (C2xC2):C4 8; (0 1); (0 2 1 3)(4 5 6 7)\n"
        "16 14 C4oD8 8; (0 2 1 3)(4 6 5 7); (0 4 1 5)(2 7 3 6); (0 2 1 3)(4 7 5 6)\n"
        "17 1 C17 17; (0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16)\n"
        "18 1 C18 11; (0 1); (2 3 4 5 6 7 8 9 10)\n"
        "18 2 C3xC6 8; (0 1); (2 3 4); (5 6 7)\n"
        "18 3 D18 9; (0 1 2 3 4 5 6 7 8); (1 8)(2 7)(3 6)(4 5)\n"
        "18 4 S3xC3 6; (0 1 2); (1 2); (3 4 5)\n"
        "18 5 (C3xC3):C2 6; (0 1 2); (3 4 5); (1 2)(4 5)\n"
        "19 1 C19 19; (0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18)\n"
        "20 1 C20 9; (0 1 2 3); (4 5 6 7 8)\n"
        "20 2 C2xC10 9; (0 1); (2 3); (4 5 6 7 8)\n"
        "20 3 D20 10; (0 1 2 3 4 5 6 7 8 9); (1 9)(2 8)(3 7)(4 6)\n"
        "20 4 C4:C5[4] 9; (0 1 2 3 4); (1 4)(2 3)(5 6 7 8)\n"
        "20 5 C4:C5[2] 5; (0 1 2 3 4); (1 2 4 3)\n"
        "21 1 C21 10; (0 1 2); (3 4 5 6 7 8 9)\n"
        "21 2 C3:C7[2] 7; (0 1 2 3 4 5 6); (1 2 4)(3 6 5)\n"
        "22 1 C22 13; (0 1); (2 3 4 5 6 7 8 9 10 11 12)\n"
        "22 2 D22 11; (0 1 2 3 4 5 6 7 8 9 10); (1 10)(2 9)(3 8)(4 7)(5 6)\n"
        "23 1 C23 23; (0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22)\n"
        "24 1 C24 11; (0 1 2 3 4 5 6 7); (8 9 10)\n"
        "24 2 C2xC12 9; (0 1); (2 3 4 5); (6 7 8)\n"
        "24 3 C2xC2xC6 9; (0 1); (2 3); (4 5); (6 7 8)\n"
        "24 4 S4 4; (0 1 2 3); (0 1)\n"
        "24 5 A4xC2 6; (0 1 2); (0 1)(2 3); (4 5)\n"
        "24 6 SL(2,3) 8; (0 5 1 2)(3 6 7 4); (0 3 6)(1 7 4)\n"
        "24 7 D24 12; (0 1 2 3 4 5 6 7 8 9 10 11); (1 11)(2 10)(3 9)(4 8)(5 7)\n"
        "24 8 Dic6 24; (0 1 12 13)(2 23 14 11)(3 10 15 22)(4 21 16 9)(5 8 17 20)(6 19 18 7); (0 2 4 6 8 10 12 14 16 18 20 22)(1 3 5 7 9 11 13 15 17 19 21 23)\n"
        "24 9 C8:C3[2] 11; (0 1 2); (1 2)(3 4 5 6 7 8 9 10)\n"
        "24 10 S3xC4 7; (0 1 2); (1 2); (3 4 5 6)\n"
        "24 11 S3xC2xC2 7; (0 1 2); (1 2); (3 4); (5 6)\n"
        "24 12 D8xC3 7; (0 1 2 3); (1 3); (4 5 6)\n"
        "24 13 Q8xC3 11; (0 2 1 3)(4 6 5 7); (0 4 1 5)(2 7 3 6); (8 9 10)\n"
        "24 14 C4:C3[2]xC2 9; (0 1 2); (1 2)(3 4 5 6); (7 8)\n"
        "24 15 C3:D8 7; (0 1 2); (1 2)(3 4 5 6); (4 6)\n"
        "27 1 C27 27; (0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26)\n"
        "27 2 C3xC9 12; (0 1 2); (3 4 5 6 7 8 9 10 11)\n"
        "27 3 C3xC3xC3 9; (0 1 2); (3 4 5); (6 7 8)\n"
        "27 4 E27 9; (0 1 2 3 4 5 6 7 8); (1 4 7)(2 8 5)\n"
        "27 5 Heis3 9; (0 3 6)(1 4 7)(2 5 8); (3 4 5)(6 8 7)\n"
        ;
}

}  // namespace sublat
