#include <gtest/gtest.h>

#include <random>

#include "vconc/diagrams.hpp"
#include "vconc/errors.hpp"

using namespace vconc;

namespace {

// Genus-one push-off system for a band surface with framings (1, 1) and one
// clasp. Crossings 1-3 give A+ = [[1,1],[0,1]], crossings 4-6 give A- = A+^T.
const char* kBandSystem = R"(@cores a b
@push a ap am
@push b bp bm
ap: O1+ O2+ ; a: U1+ U4+ U5+ ; b: U2+ U3+ U6+ ;
bp: O3+ ; am: O4+ ; bm: O5+ O6+)";

// The (1,2) entries of both sides come from three crossings (+,+,flip).
std::string clasp_system(char flip) {
  std::string f(1, flip);
  return "@cores a b\n@push a ap am\n@push b bp bm\n"
         "ap: O1+ O2+ O7+ O8" + f + " ; a: U1+ U4+ U5+ U9+ U10" + f + " ; b: U2+ U3+ U6+ U7+ U8" + f + " ;\n"
         "bp: O3+ ; am: O4+ ; bm: O5+ O6+ O9+ O10" + f;
}

Condition assemble_failure(const std::string& text) {
  try {
    assemble_couple(parse_curve_system(text));
  } catch (const ValidationError& e) {
    return e.condition();
  }
  ADD_FAILURE() << "accepted";
  return Condition::kDiagram;
}

VirtualLinkDiagram random_diagram(std::mt19937& rng) {
  std::uniform_int_distribution<int> ncomp(1, 4), ncross(0, 8), sign(0, 1), role(0, 1);
  VirtualLinkDiagram d;
  int k = ncomp(rng);
  for (int i = 0; i < k; ++i) d.components.push_back({"c" + std::to_string(i), {}});
  std::uniform_int_distribution<int> which(0, k - 1);
  int crossings = ncross(rng);
  for (long id = 1; id <= crossings; ++id) {
    int s = sign(rng) ? 1 : -1;
    auto& over = d.components[which(rng)].passages;
    over.insert(over.begin() + (over.empty() ? 0 : rng() % (over.size() + 1)), Passage{id, Role::kOver, s});
    auto& under = d.components[which(rng)].passages;
    under.insert(under.begin() + (under.empty() ? 0 : rng() % (under.size() + 1)), Passage{id, Role::kUnder, s});
  }
  return d;
}

}  // namespace

TEST(Gauss, ParsesSmallDiagrams) {
  auto d = parse_gauss("J: O1+ ; K: U1+");
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.crossing_count(), 1u);
  auto kink = parse_gauss("J: O1+ U1+");
  EXPECT_EQ(kink.components.size(), 1u);
  EXPECT_EQ(parse_gauss("  J :O 1 + ;K:U1+  ").components[1].passages[0], (Passage{1, Role::kUnder, 1}));
  EXPECT_EQ(parse_gauss("J: O1\xE2\x88\x92 ; K: U1-").components[0].passages[0].sign, -1);
  EXPECT_TRUE(parse_gauss("").components.empty());
}

TEST(Gauss, RejectsInconsistentCrossings) {
  auto condition = [](const char* text) {
    try {
      parse_gauss(text);
    } catch (const ValidationError& e) {
      return e.condition();
    }
    return Condition::kNotSquare;
  };
  EXPECT_EQ(condition("J: O1+ ; K: O1+"), Condition::kDiagram);
  EXPECT_EQ(condition("J: O1+ ; K: U1-"), Condition::kDiagram);
  EXPECT_EQ(condition("J: O1+ ; K: U2+"), Condition::kDiagram);
}

TEST(Gauss, SyntaxErrorsCarryPositions) {
  try {
    parse_gauss("J: O1+ ; K: X1+");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
  EXPECT_THROW(parse_gauss("J O1+"), ParseError);
  EXPECT_THROW(parse_gauss("J: O+"), ParseError);
  EXPECT_THROW(parse_gauss("J: O1"), ParseError);
  EXPECT_THROW(parse_gauss("J: O1+ ; J: U1+"), ParseError);
}

TEST(Vlk, HopfLinks) {
  auto virtual_hopf = parse_gauss("J: O1+ ; K: U1+");
  EXPECT_EQ(vlk(virtual_hopf, "J", "K"), 1);
  EXPECT_EQ(vlk(virtual_hopf, "K", "J"), 0);
  auto hopf = parse_gauss("J: O1+ U2+ ; K: U1+ O2+");
  EXPECT_EQ(vlk(hopf, "J", "K"), 1);
  EXPECT_EQ(vlk(hopf, "K", "J"), 1);
  auto split = parse_gauss("J: O1+ U1+ ; K: O2- U2-");
  EXPECT_EQ(vlk(split, "J", "K"), 0);
  EXPECT_THROW(vlk(hopf, "J", "L"), InvalidArgument);
  EXPECT_THROW(vlk(hopf, "J", "J"), InvalidArgument);
}

TEST(Vlk, AsymmetryMatchesMutualCrossingCount) {
  std::mt19937 rng(81);
  for (int it = 0; it < 200; ++it) {
    auto d = random_diagram(rng);
    for (const auto& j : d.components)
      for (const auto& k : d.components) {
        if (j.name == k.name) continue;
        int expected = 0;
        for (const auto& pj : j.passages)
          for (const auto& pk : k.passages)
            if (pj.id == pk.id) expected += pj.role == Role::kOver ? pj.sign : -pj.sign;
        EXPECT_EQ(vlk(d, j.name, k.name) - vlk(d, k.name, j.name), expected);
      }
  }
}

TEST(Gauss, RenderRoundTrip) {
  std::mt19937 rng(82);
  for (int it = 0; it < 200; ++it) {
    auto d = random_diagram(rng);
    EXPECT_EQ(parse_gauss(render(d)), d) << render(d);
  }
}

TEST(Assemble, BandSurfaceSystem) {
  auto c = assemble_couple(parse_curve_system(kBandSystem));
  EXPECT_EQ(c.a_plus, (RatMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(c.a_minus, (RatMatrix{{1, 0}, {1, 1}}));
  EXPECT_TRUE(c.admissible);
  auto clasp = assemble_couple(parse_curve_system(clasp_system('-')));
  EXPECT_EQ(clasp, c);
}

TEST(Assemble, EmptySystem) {
  auto c = assemble_couple(parse_curve_system("@cores\n"));
  EXPECT_EQ(c.dim(), 0u);
}

TEST(Assemble, FlippedSignsAreCaught) {
  // Flipping one crossing changes one entry by 2 and breaks skew-symmetry.
  std::string single = clasp_system('-');
  auto at = single.find("O8-");
  single.replace(at, 3, "O8+");
  auto at2 = single.find("U8-");
  single.replace(at2, 3, "U8+");
  EXPECT_EQ(assemble_failure(single), Condition::kSkewSymmetry);
  // Flipping the matching crossing on the other side restores skew-symmetry,
  // leaving det(A- - A+) = 9.
  EXPECT_EQ(assemble_failure(clasp_system('+')), Condition::kDeterminant);
}

TEST(Assemble, MalformedSystems) {
  EXPECT_THROW(parse_curve_system("@cores a\n@push a ap am\nap: ; a: ; am:"), ValidationError);
  EXPECT_THROW(parse_curve_system("@cores a b\n@push a ap am\nap: ; a: ; am: ; b:"), ValidationError);
  EXPECT_THROW(parse_curve_system("@bogus\n"), ParseError);
  EXPECT_THROW(parse_curve_system("@cores a b\n@push a ap am\n@push b bp bm\nap: ; a: ; am: ; b: ; bp:"), ValidationError);
}
