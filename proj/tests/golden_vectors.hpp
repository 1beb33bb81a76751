// Copyright (c) 2026 The chaoshash authors
// SPDX-License-Identifier: Apache-2.0
//
// Hand-checked vectors for the worked pre-treatment example: the message
// "The original text" traced through every stage at n = 256.
#pragma once

#include <string>

namespace chaoshash::testvec {

inline const std::string kGoldenMessage = "The original text";

// 119 message bits followed by the appended marker '1' (120 bits).
inline const std::string kAfterMarker =
    "10101001" "10100011" "00101010" "00001101" "11111100"
    "10110100" "11100111" "11010011" "10111011" "00001110"
    "11000100" "00011101" "00110010" "11111000" "11101001";

// The same with the 7-bit length block 1111000 (value 120); the total
// length 127 is odd, so no further bit is appended.
inline const std::string kAfterLengthBlock = kAfterMarker + "1111000";

// The 127-bit string followed by its reversal (254 bits).
inline const std::string kMirrored =
    "10101001" "10100011" "00101010" "00001101" "11111100"
    "10110100" "11100111" "11010011" "10111011" "00001110"
    "11000100" "00011101" "00110010" "11111000" "11101001"
    "11110000" "00111110" "01011100" "01111101" "00110010"
    "11100000" "10001101" "11000011" "01110111" "00101111"
    "10011100" "10110100" "11111110" "11000001" "01010011"
    "00010110" "010101";

// x0: the XOR fold of the 512-bit expansion of the mirrored string.
inline const std::string kX0Bits =
    "00001111" "00101111" "10000010" "00111010" "00001110"
    "01100111" "01111000" "10011101" "01010111" "00110101"
    "11010100" "01101001" "11111001" "00011011" "01001110"
    "00110000" "11000111" "00101101" "10001001" "11111001"
    "01100010" "10111010" "11001110" "10101011" "10010001"
    "11101110" "01100111" "00000101" "11000100" "00011111"
    "01001111" "00001100";

inline const std::string kX0Hex =
    "0F2F823A0E67789D5735D469F91B4E30C72D89F962BACEAB91EE6705C41F4F0C";

// Frozen digests of this implementation (key, message, n), fixed at the
// first verified build; any change to the pipeline or the generator is a
// breaking change and must show up here.
inline const std::string kDigestMyKey256 =
    "44EE5C9B6B0753DEEE084273FE9E56A0FEFAC23296D6519255471AC389AA53F2";
inline const std::string kDigestMyKeyLower256 =
    "8040F383163E3460F5EDAD625518DC029826CE1AE61FFF63868D8B576DC0CB4A";
inline const std::string kDigestMyKey512 =
    "7580347A7969356E51DC44F90C7AD8ABC4659E86C9FB18098B933DAB032FEC6A"
    "3E5B30BE9C88CD0AEE0BCA9C76DE5903E6715237BC30CC872CC0F27F2FF52E5E";
inline const std::string kDigestAnotherKey256 =
    "BB89E162B90D3454AC964031BA9F87C0D1954CE71F801B4C8A4D9F0BA60A6853";

// Digests published for other implementations of this construction whose
// generator internals differ; ours must not silently coincide with them.
inline const std::string kForeignDigestUpper =
    "AF71542C90F450F6AE3F649A0784E6B16B788258E87654B4D6353A2172838032";
inline const std::string kForeignDigestLower =
    "BAD8789AD6924B6460F8E7686A24A4228486DC8FDCAE15F1F681B91311426056";

}  // namespace chaoshash::testvec
