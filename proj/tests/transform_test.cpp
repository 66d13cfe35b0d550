#include "qtg/transform.hpp"

#include <gtest/gtest.h>

namespace qtg {
namespace {

const TiElement T0 = TiElement::transposition(0);

TEST(TiElement, ActionOnPitchClasses) {
  EXPECT_EQ(T0(PitchClass(17)), PitchClass(17));
  EXPECT_EQ(TiElement::inversion(0)(PitchClass(8)), PitchClass(16));
  EXPECT_EQ(TiElement::inversion(14)(PitchClass(8)), PitchClass(6));
  EXPECT_EQ(TiElement::transposition(5)(PitchClass(22)), PitchClass(3));
  EXPECT_EQ(apply_pc(TiElement::inversion(0), PitchClass(8)), PitchClass(16));
}

TEST(TiElement, IndicesReduceMod24) {
  EXPECT_EQ(TiElement::transposition(25), TiElement::transposition(1));
  EXPECT_EQ(TiElement::inversion(-1), TiElement::inversion(23));
}

TEST(Compose, MatchesTheRelationTable) {
  EXPECT_EQ(compose(TiElement::transposition(3), TiElement::inversion(5)),
            TiElement::inversion(8));
  EXPECT_EQ(compose(TiElement::inversion(2), TiElement::inversion(2)), T0);
  EXPECT_EQ(compose(TiElement::inversion(3), TiElement::transposition(4)),
            TiElement::inversion(23));
  EXPECT_EQ(compose(TiElement::transposition(20), TiElement::transposition(10)),
            TiElement::transposition(6));
}

TEST(Compose, AgreesWithPointwiseApplicationExhaustively) {
  const auto elements = all_ti_elements();
  ASSERT_EQ(elements.size(), 48u);
  for (TiElement a : elements) {
    for (TiElement b : elements) {
      const TiElement c = compose(a, b);
      for (int x = 0; x < kPitchClasses; ++x) {
        ASSERT_EQ(c(PitchClass(x)), a(b(PitchClass(x))))
            << to_string(a) << " ∘ " << to_string(b) << " at " << x;
      }
    }
  }
}

TEST(Compose, AssociativeExhaustively) {
  const auto elements = all_ti_elements();
  for (TiElement a : elements) {
    for (TiElement b : elements) {
      const TiElement ab = compose(a, b);
      for (TiElement c : elements) {
        ASSERT_EQ(compose(ab, c), compose(a, compose(b, c)));
      }
    }
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(TiElement::transposition(5)), TiElement::transposition(19));
  EXPECT_EQ(inverse(TiElement::inversion(13)), TiElement::inversion(13));
  EXPECT_EQ(inverse(T0), T0);
  for (TiElement e : all_ti_elements()) {
    EXPECT_EQ(compose(e, inverse(e)), T0);
    EXPECT_EQ(compose(inverse(e), e), T0);
  }
}

TEST(Power, RepeatedComposition) {
  EXPECT_EQ(power(TiElement::transposition(1), 24), T0);
  EXPECT_EQ(power(TiElement::inversion(0), 2), T0);
  EXPECT_EQ(power(TiElement::transposition(7), 0), T0);
  EXPECT_EQ(power(TiElement::transposition(5), -1), TiElement::transposition(19));
  EXPECT_EQ(power(TiElement::inversion(3), -3), TiElement::inversion(3));
  // k-fold compose agrees with the closed form.
  for (TiElement e : all_ti_elements()) {
    TiElement acc = T0;
    for (int k = 0; k <= 30; ++k) {
      EXPECT_EQ(power(e, k), acc) << to_string(e) << "^" << k;
      acc = compose(e, acc);
    }
  }
}

TEST(DihedralRelation, ConjugationInvertsTranspositions) {
  for (int m = 0; m < kPitchClasses; ++m) {
    const TiElement im = TiElement::inversion(m);
    for (int n = 0; n < kPitchClasses; ++n) {
      const TiElement tn = TiElement::transposition(n);
      EXPECT_EQ(compose(im, compose(tn, im)), inverse(tn));
    }
  }
}

TEST(TextForm, RoundTrips) {
  for (TiElement e : all_ti_elements()) {
    EXPECT_EQ(parse_ti(to_string(e)), e);
  }
  EXPECT_EQ(parse_ti("T5"), TiElement::transposition(5));
  EXPECT_EQ(parse_ti("I14"), TiElement::inversion(14));
  EXPECT_EQ(parse_ti("t25"), TiElement::transposition(1));
  EXPECT_THROW(parse_ti("X3"), MalformedTiElement);
  EXPECT_THROW(parse_ti("T"), MalformedTiElement);
  EXPECT_THROW(parse_ti("T3x"), MalformedTiElement);
  EXPECT_THROW(parse_ti(""), MalformedTiElement);
}

}  // namespace
}  // namespace qtg
