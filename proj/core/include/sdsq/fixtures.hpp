#pragma once

#include "sdsq/generic.hpp"
#include "sdsq/square.hpp"

namespace sdsq::fixtures {

// Named reference squares used across the test surface and shipped as text
// files under squares/. fig1 is trivially self-descriptive; fig12 is a
// trivial generic; everything else numeric is nontrivially s-d.

Square fig1();    // 4x4, trivial (redundant and incomplete border)
Square fig2();    // 4x4, nontrivial
Square fig3();    // 4x4, a rearrangement of fig2
Square fig4();    // 4x4, the standard normal form of fig2 and fig3
Square fig8a();   // 3x3, in SNF
Square fig8b();   // 3x3, in SNF
Square fig14l();  // 4x4, numeric source of the fig14r generic
Square fig19();   // 6x6, minimal and magic
Square fig20();   // 5x5, concentric

GenericSquare fig12();   // 2x2 trivial generic in x
GenericSquare fig13a();  // 5x5 generic in x and y
GenericSquare fig13b();  // 6x6 generic in x and y
GenericSquare fig14r();  // 4x4 generic in x

}  // namespace sdsq::fixtures
