#include "sdsq/fixtures.hpp"

namespace sdsq::fixtures {

Square fig1() {
  return Square{{2, 1, -2, 2},
                {1, 2, 3, -4},
                {3, 1, -1, -1},
                {-4, -2, 3, 4}};
}

Square fig2() {
  return Square{{1, 3, 3, -4},
                {3, -4, 2, 1},
                {-1, 2, -4, 4},
                {-1, 0, 2, 3}};
}

Square fig3() {
  return Square{{2, -1, -4, 4},
                {-4, 3, 2, 1},
                {3, 1, 3, -4},
                {0, -1, 2, 3}};
}

Square fig4() {
  return Square{{1, 3, -1, -1},
                {3, -4, 2, 0},
                {3, 2, -4, 2},
                {-4, 1, 4, 3}};
}

Square fig8a() {
  return Square{{2, -2, 2},
                {0, -2, 3},
                {0, 5, -2}};
}

Square fig8b() {
  return Square{{2, 0, 0},
                {2, -2, 1},
                {-2, 3, 2}};
}

Square fig14l() {
  return Square{{4, 5, -2, -5},
                {-2, -5, 4, 5},
                {0, -2, 4, 0},
                {-1, 3, -2, 4}};
}

Square fig19() {
  return Square{{-5, 0, 3, 3, 3, -3},
                {1, 1, 1, 3, -1, -4},
                {-1, 2, 1, -1, 2, 2},
                {1, 4, 1, -1, 0, 0},
                {0, 0, -2, 2, 2, 3},
                {5, -5, -2, -1, 1, 4}};
}

Square fig20() {
  return Square{{0, 4, 5, -2, -5},
                {0, 0, 2, 0, -1},
                {4, -2, -2, 5, 0},
                {-5, 3, 2, -2, 5},
                {3, -4, -2, 2, 4}};
}

GenericSquare fig12() {
  return GenericSquare{{"x", "2-x"},
                       {"2-x", "x"}};
}

GenericSquare fig13a() {
  return GenericSquare{{"4", "-2", "1-x", "-1", "x"},
                       {"5", "-2", "x", "-2", "1-x"},
                       {"-1", "5", "-1", "4", "-2"},
                       {"-2", "y-6", "-1", "7-y", "5"},
                       {"-1", "7-y", "4", "y-6", "-3"}};
}

GenericSquare fig13b() {
  return GenericSquare{{"3+x", "4+x", "2", "-2-x", "-5-x", "2"},
                       {"-2-x", "4+x", "4+x", "6-y", "-3-x", "y-7"},
                       {"2", "-2-x", "4+x", "1", "-3-x", "4+x"},
                       {"1", "1", "-2-x", "y-7", "3+x", "6-y"},
                       {"4+x", "0", "-5-x", "2", "5+x", "-3-x"},
                       {"-5-x", "-2-x", "1", "3+x", "5+x", "0"}};
}

GenericSquare fig14r() {
  return GenericSquare{{"4", "x", "-2", "-x"},
                       {"-2", "-x", "4", "x"},
                       {"0", "-2", "4", "0"},
                       {"-1", "3", "-2", "4"}};
}

}  // namespace sdsq::fixtures
