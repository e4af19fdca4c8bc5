/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string_view>

namespace weyl_e8 {

/// Minimal generators of the joint covariant ring of a binary quartic f and
/// sextic g, one per line, as nested transvectants.
///
/// Grammar:
///   line   := label " = " expr
///   label  := "G(" da "," db "," m "," order ["," n] ")"
///   expr   := factor ("*" factor)*
///   factor := atom ["^" int]
///   atom   := "f" | "g" | label | "T(" expr "," expr "," int ")" | "(" expr ")"
inline constexpr std::string_view kCatalogRecipes = R"(G(1,0,0,4) = f
G(0,1,0,6) = g
G(1,1,1,8) = T(f, g, 1)
G(2,0,2,4) = T(f, f, 2)
G(1,1,2,6) = T(f, g, 2)
G(0,2,2,8) = T(g, g, 2)
G(1,1,3,4) = T(f, g, 3)
G(3,0,3,6) = T(f, G(2,0,2,4), 1)
G(2,1,3,8) = T(G(2,0,2,4), g, 1)
G(1,2,3,10) = T(f, G(0,2,2,8), 1)
G(0,3,3,12) = T(g, G(0,2,2,8), 1)
G(2,0,4,0) = T(f, f, 4)
G(1,1,4,2) = T(f, g, 4)
G(0,2,4,4) = T(g, g, 4)
G(2,1,4,6) = T(G(2,0,2,4), g, 2)
G(1,2,4,8) = T(f, G(0,2,2,8), 2)
G(2,1,5,4,1) = T(f^2, g, 5)
G(2,1,5,4,2) = T(G(2,0,2,4), g, 3)
G(1,2,5,6,1) = T(f, G(0,2,4,4), 1)
G(1,2,5,6,2) = T(f, G(0,2,2,8), 3)
G(0,3,5,8) = T(g, G(0,2,4,4), 1)
G(3,0,6,0) = T(f, G(2,0,2,4), 4)
G(0,2,6,0) = T(g, g, 6)
G(2,1,6,2,1) = T(G(2,0,2,4), g, 4)
G(2,1,6,2,2) = T(f^2, g, 6)
G(1,2,6,4,1) = T(f, G(0,2,4,4), 2)
G(1,2,6,4,2) = T(f, G(0,2,2,8), 4)
G(0,3,6,6) = T(g, G(0,2,4,4), 2)
G(1,2,7,2) = T(f, G(0,2,4,4), 3)
G(3,1,7,4,1) = T(G(3,0,3,6), g, 4)
G(3,1,7,4,2) = T(f*G(2,0,2,4), g, 5)
G(2,2,7,6,1) = T(G(2,0,2,4), G(0,2,2,8), 3)
G(2,2,7,6,2) = T(f^2, G(0,2,2,8), 5)
G(2,2,7,6,3) = T(G(2,0,2,4), G(0,2,4,4), 1)
G(1,3,7,8,1) = T(f, G(0,3,5,8), 2)
G(1,3,7,8,2) = T(f, G(0,3,3,12), 4)
G(0,4,7,10) = T(G(0,2,2,8), G(0,2,4,4), 1)
G(1,2,8,0) = T(f, G(0,2,4,4), 4)
G(3,1,8,2,1) = T(f*G(2,0,2,4), g, 6)
G(3,1,8,2,2) = T(G(3,0,3,6), g, 5)
G(0,3,8,2) = T(g, G(0,2,4,4), 4)
G(2,2,8,4,1) = T(G(2,0,2,4), G(0,2,2,8), 4)
G(2,2,8,4,2) = T(G(2,0,2,4), G(0,2,4,4), 2)
G(2,2,8,4,3) = T(f^2, G(0,2,2,8), 6)
G(1,3,8,6) = T(f, G(0,3,5,8), 3)
G(3,1,9,0) = T(G(3,0,3,6), g, 6)
G(2,2,9,2,1) = T(G(2,0,2,4), G(0,2,4,4), 3)
G(2,2,9,2,2) = T(f^2, G(0,2,2,8), 7)
G(4,1,9,4) = T((G(2,0,2,4))^2, g, 5)
G(1,3,9,4,1) = T(f, G(0,3,5,8), 4)
G(1,3,9,4,2) = T(f, G(0,3,8,2), 1)
G(1,3,9,4,3) = T(f, G(0,3,6,6), 3)
G(0,4,9,6) = T(g, G(0,3,8,2), 1)
G(2,2,10,0,1) = T(f^2, G(0,2,2,8), 8)
G(2,2,10,0,2) = T(G(2,0,2,4), G(0,2,4,4), 4)
G(4,1,10,2) = T((G(2,0,2,4))^2, g, 6)
G(1,3,10,2,1) = T(f, G(0,3,8,2), 2)
G(1,3,10,2,2) = T(f, G(0,3,6,6), 4)
G(3,2,10,4,1) = T(f*G(2,0,2,4), G(0,2,2,8), 6)
G(3,2,10,4,2) = T(G(3,0,3,6), G(0,2,2,8), 5)
G(0,4,10,4) = T(g, G(0,3,8,2), 2)
G(3,2,11,2,1) = T(f*G(2,0,2,4), G(0,2,2,8), 7)
G(3,2,11,2,2) = T(f^3, g^2, 11)
G(3,2,11,2,3) = T(G(3,0,3,6), G(0,2,2,8), 6)
G(3,2,11,2,4) = T(G(3,0,3,6), G(0,2,4,4), 4)
G(2,3,11,4,1) = T(f^2, G(0,3,3,12), 8)
G(2,3,11,4,2) = T(G(2,0,2,4), G(0,3,8,2), 1)
G(2,3,11,4,3) = T(G(2,0,2,4), G(0,3,6,6), 3)
G(2,3,11,4,4) = T(G(2,0,2,4), G(0,3,5,8), 4)
G(2,3,11,4,5) = T(f^2, G(0,3,6,6), 5)
G(1,4,11,6,1) = T(f, G(0,4,7,10), 4)
G(1,4,11,6,2) = T(f, G(0,4,10,4), 1)
G(1,4,11,6,3) = T(f, G(0,4,9,6), 2)
G(0,5,11,8) = T(G(0,2,2,8), G(0,3,8,2), 1)
G(3,2,12,0,1) = T(f*G(2,0,2,4), G(0,2,2,8), 8)
G(3,2,12,0,2) = T(f^3, g^2, 12)
G(0,4,12,0) = T(G(0,2,4,4), G(0,2,4,4), 4)
G(2,3,12,2,1) = T(G(2,0,2,4), G(0,3,6,6), 4)
G(2,3,12,2,2) = T(f^2, G(0,3,6,6), 6)
G(2,3,12,2,3) = T(G(2,0,2,4), G(0,3,8,2), 2)
G(2,3,12,2,4) = T(f^2, G(0,3,5,8), 7)
G(1,4,12,4,1) = T(f, G(0,4,9,6), 3)
G(1,4,12,4,2) = T(f, G(0,4,10,4), 2)
G(2,3,13,0) = T(f^2, G(0,3,5,8), 8)
G(4,2,13,2,1) = T(f^2*G(2,0,2,4), g^2, 11)
G(4,2,13,2,2) = T(f*G(3,0,3,6), G(0,2,2,8), 8)
G(4,2,13,2,3) = T((G(2,0,2,4))^2, G(0,2,2,8), 7)
G(1,4,13,2,1) = T(f, G(0,4,10,4), 3)
G(1,4,13,2,2) = T(f, G(0,4,9,6), 4)
G(3,3,13,4,1) = T(f*G(2,0,2,4), G(0,3,3,12), 8)
G(3,3,13,4,2) = T(G(3,0,3,6), G(0,3,6,6), 4)
G(0,5,13,4) = T(G(0,2,4,4), G(0,3,8,2), 1)
G(4,2,14,0,1) = T(f^2*G(2,0,2,4), g^2, 12)
G(4,2,14,0,2) = T((G(2,0,2,4))^2, G(0,2,2,8), 8)
G(1,4,14,0) = T(f, G(0,4,10,4), 4)
G(3,3,14,2,1) = T(f^3, G(0,3,3,12), 11)
G(3,3,14,2,2) = T(f*G(2,0,2,4), G(0,3,6,6), 6)
G(3,3,14,2,3) = T(f*G(2,0,2,4), G(0,3,5,8), 7)
G(3,3,14,2,4) = T(G(3,0,3,6), G(0,3,5,8), 6)
G(0,5,14,2) = T(G(0,2,4,4), G(0,3,8,2), 2)
G(2,4,14,4) = T(G(2,0,2,4), G(0,4,9,6), 3)
G(3,3,15,0,1) = T(f*G(2,0,2,4), G(0,3,5,8), 8)
G(3,3,15,0,2) = T(G(3,0,3,6), G(0,3,6,6), 6)
G(3,3,15,0,3) = T(f^3, G(0,3,3,12), 12)
G(5,2,15,2,1) = T(G(2,0,2,4)*G(3,0,3,6), G(0,2,2,8), 8)
G(5,2,15,2,2) = T(f*(G(2,0,2,4))^2, g^2, 11)
G(2,4,15,2,1) = T(f^2, g*G(0,3,8,2), 7)
G(2,4,15,2,2) = T(G(2,0,2,4), G(0,4,10,4), 3)
G(2,4,15,2,3) = T(f^2, G(0,4,7,10), 8)
G(2,4,15,2,4) = T(f^2, G(0,4,9,6), 6)
G(2,4,15,2,5) = T(G(2,0,2,4), G(0,4,9,6), 4)
G(1,5,15,4,1) = T(f, G(0,5,14,2), 1)
G(1,5,15,4,2) = T(f, G(0,5,11,8), 4)
G(1,5,15,4,3) = T(f, G(0,5,13,4), 2)
G(0,6,15,6,1) = T(G(0,3,5,8), G(0,3,8,2), 2)
G(0,6,15,6,2) = T(G(0,3,6,6), G(0,3,8,2), 1)
G(5,2,16,0) = T(f*(G(2,0,2,4))^2, g^2, 12)
G(2,4,16,0,1) = T(G(2,0,2,4), G(0,4,10,4), 4)
G(2,4,16,0,2) = T(f^2, g*G(0,3,8,2), 8)
G(4,3,16,2,1) = T(f^2*G(2,0,2,4), G(0,3,3,12), 11)
G(4,3,16,2,2) = T(f*G(3,0,3,6), G(0,3,5,8), 8)
G(1,5,16,2,1) = T(f, G(0,5,14,2), 2)
G(1,5,16,2,2) = T(f, G(0,5,13,4), 3)
G(4,3,17,0,1) = T(f^2*G(2,0,2,4), G(0,3,3,12), 12)
G(4,3,17,0,2) = T((G(2,0,2,4))^2, G(0,3,5,8), 8)
G(1,5,17,0) = T(f, G(0,5,13,4), 4)
G(3,4,17,2,1) = T(f^3, G(0,4,7,10), 10)
G(3,4,17,2,2) = T(f^3, g*G(0,3,6,6), 11)
G(3,4,17,2,3) = T(G(3,0,3,6), (G(0,2,4,4))^2, 6)
G(3,4,17,2,4) = T(f*G(2,0,2,4), G(0,4,9,6), 6)
G(3,4,17,2,5) = T(f*G(2,0,2,4), G(0,4,7,10), 8)
G(3,4,17,2,6) = T(G(3,0,3,6), G(0,4,9,6), 5)
G(2,5,17,4) = T(G(2,0,2,4), G(0,5,11,8), 4)
G(3,4,18,0,1) = T(f^3, g*G(0,3,6,6), 12)
G(3,4,18,0,2) = T(f*G(2,0,2,4), g*G(0,3,8,2), 8)
G(3,4,18,0,3) = T(G(3,0,3,6), G(0,4,9,6), 6)
G(0,6,18,0) = T(G(0,3,8,2), G(0,3,8,2), 2)
G(2,5,18,2,1) = T(G(2,0,2,4), G(0,5,14,2), 2)
G(2,5,18,2,2) = T(f^2, G(0,5,11,8), 7)
G(2,5,18,2,3) = T(G(2,0,2,4), G(0,5,13,4), 3)
G(5,3,19,0) = T(f*(G(2,0,2,4))^2, G(0,3,3,12), 12)
G(2,5,19,0,1) = T(G(2,0,2,4), G(0,5,13,4), 4)
G(2,5,19,0,2) = T(f^2, G(0,5,11,8), 8)
G(4,4,19,2) = T((G(2,0,2,4))^2, G(0,4,7,10), 8)
G(1,6,19,2,1) = T(f, G(0,6,15,6,2), 4)
G(1,6,19,2,2) = T(f, G(0,6,15,6,1), 4)
G(1,6,19,2,3) = T(f, (G(0,3,8,2))^2, 3)
G(0,7,19,4) = T(g, (G(0,3,8,2))^2, 3)
G(4,4,20,0,1) = T(f^2*G(2,0,2,4), g*G(0,3,6,6), 12)
G(4,4,20,0,2) = T((G(2,0,2,4))^2, g*G(0,3,8,2), 8)
G(1,6,20,0) = T(f, (G(0,3,8,2))^2, 4)
G(0,7,20,2) = T(g, (G(0,3,8,2))^2, 4)
G(6,3,21,0) = T((G(2,0,2,4))^3, G(0,3,3,12), 12)
G(3,5,21,0,1) = T(G(3,0,3,6), G(0,2,4,4)*G(0,3,8,2), 6)
G(3,5,21,0,2) = T(f^3, g*G(0,4,9,6), 12)
G(3,5,21,0,3) = T(f*G(2,0,2,4), G(0,5,11,8), 8)
G(2,6,21,2,1) = T(f^2, G(0,3,6,6)*G(0,3,8,2), 7)
G(2,6,21,2,2) = T(G(2,0,2,4), (G(0,3,8,2))^2, 3)
G(2,6,21,2,3) = T(G(2,0,2,4), G(0,6,15,6,1), 4)
G(2,6,21,2,4) = T(f^2, G(0,6,15,6,2), 6)
G(1,7,21,4) = T(f, G(0,7,19,4), 2)
G(2,6,22,0,1) = T(f^2, G(0,3,6,6)*G(0,3,8,2), 8)
G(2,6,22,0,2) = T(G(2,0,2,4), (G(0,3,8,2))^2, 4)
G(1,7,22,2) = T(f, G(0,7,20,2), 2)
G(4,5,23,0,1) = T(f*G(3,0,3,6), G(0,2,2,8)*G(0,3,8,2), 10)
G(4,5,23,0,2) = T(f^2*G(2,0,2,4), g*G(0,4,9,6), 12)
G(1,7,23,0) = T(f, G(0,7,19,4), 4)
G(3,6,23,2) = T(G(3,0,3,6), (G(0,3,8,2))^2, 4)
G(0,8,23,2) = T(G(0,2,4,4), (G(0,3,8,2))^2, 3)
G(3,6,24,0,1) = T(f*G(2,0,2,4), G(0,5,14,2)*g, 8)
G(3,6,24,0,2) = T(f^3, (G(0,3,6,6))^2, 12)
G(5,5,25,0) = T(G(2,0,2,4)*G(3,0,3,6), G(0,2,2,8)*G(0,3,8,2), 10)
G(2,7,25,0,1) = T(G(2,0,2,4), G(0,7,19,4), 4)
G(2,7,25,0,2) = T(f^2, G(0,3,8,2)*G(0,4,9,6), 8)
G(1,8,25,2,1) = T(f, G(0,8,23,2), 2)
G(1,8,25,2,2) = T(f, G(0,3,8,2)*G(0,5,14,2), 3)
G(0,9,25,4) = T(G(0,3,5,8), (G(0,3,8,2))^2, 4)
G(1,8,26,0) = T(f, G(0,3,8,2)*G(0,5,14,2), 4)
G(3,7,27,0) = T(f^3, g*G(0,6,15,6,1), 12)
G(2,8,27,2) = T(f^2, G(0,3,6,6)*G(0,5,14,2), 7)
G(2,8,28,0) = T(f^2, G(0,3,6,6)*G(0,5,14,2), 8)
G(4,7,29,0) = T(f^2*G(2,0,2,4), g*G(0,6,15,6,2), 12)
G(1,9,29,0) = T(f, G(0,9,25,4), 4)
G(0,10,29,2) = T(g, (G(0,3,8,2))^3, 5)
G(0,10,30,0) = T(g, (G(0,3,8,2))^3, 6)
G(2,9,31,0) = T(f^2, G(0,3,8,2)*G(0,6,15,6,1), 8)
G(1,10,31,2) = T(f, (G(0,5,14,2))^2, 3)
G(1,10,32,0) = T(f, (G(0,5,14,2))^2, 4)
G(3,9,33,0) = T(f*G(2,0,2,4), G(0,3,8,2)*G(0,6,15,6,2), 8)
G(1,11,35,0) = T(f, G(0,3,8,2)*G(0,8,23,2), 4)
G(0,12,35,2) = T(G(0,3,5,8), (G(0,3,8,2))^3, 6)
G(2,11,37,0) = T(f^2, G(0,3,6,6)*G(0,8,23,2), 8)
G(1,13,41,0) = T(f, G(0,3,8,2)*G(0,10,29,2), 4)
G(0,15,45,0) = T(G(0,3,5,8), (G(0,3,8,2))^4, 8)
)";

/// FNV-1a 64 of kCatalogRecipes.
inline constexpr std::uint64_t kCatalogRecipesChecksum = 0x7d6df8241976ed93ULL;

}  // namespace weyl_e8
