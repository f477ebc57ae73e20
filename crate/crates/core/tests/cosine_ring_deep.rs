//! Heavier cosine-ring checks that exercise complete enumeration in the
//! degree-8 field of conductor 32.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use sumsq_core::cyclo::{
    cosine_field, is_indecomposable_cosine, special_elements, Conductor,
};
use sumsq_core::exact::Bound;
use sumsq_core::numfield::integral_elements_with_house_below;

#[test]
fn conductor_32_distinguished_elements_are_indecomposable() {
    let c = Conductor::new(32).unwrap();
    let (alpha, gamma) = special_elements(c);
    let gamma = gamma.unwrap();
    assert!(is_indecomposable_cosine(&alpha).unwrap());
    assert!(is_indecomposable_cosine(&gamma).unwrap());
    assert!(is_indecomposable_cosine(&alpha.mul(&gamma)).unwrap());
}

#[test]
fn no_norm_three_element_has_small_house() {
    // In every power-of-two cosine field here, 3 generates a prime ideal of
    // full inertia degree; in particular no integer of norm +-3 exists at
    // all, which this check witnesses in the bounded region where one would
    // have to live if the ideal split.
    let cap = Bound::Rational(BigRational::new(BigInt::from(5), BigInt::from(2)));
    for q in [8u64, 16, 32] {
        let field = cosine_field(Conductor::new(q).unwrap()).unwrap();
        let small = integral_elements_with_house_below(&field, &cap);
        assert!(!small.is_empty(), "the region always holds 1 and -1");
        for e in &small {
            assert_ne!(e.norm().abs(), BigRational::from_integer(BigInt::from(3)),
                "conductor {} has a norm-3 element with small house: {}", q, e);
        }
    }
}
