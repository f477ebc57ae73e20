//! Sum-of-squares decisions inside the cosine rings: the distinguished
//! norm-2 / norm-p elements doubled, and soundness of the coefficient-parity
//! obstruction against the complete decision procedure.

use num_bigint::BigInt;
use num_traits::One;

use sumsq_core::cyclo::{
    cosine_field, from_field_element, parity_obstruction, special_elements, to_field_element,
    Conductor,
};
use sumsq_core::numfield::{totally_positive_with_trace_at_most, Element};
use sumsq_core::sos::{all_sos_decompositions, decide_sos, Decision};

#[test]
fn doubled_alpha_is_a_sum_of_squares_only_at_conductor_eight() {
    // q = 8: 2*alpha = 4 + 2*omega has exactly the decomposition
    // 1^2 + (1 + omega)^2.
    let c8 = Conductor::new(8).unwrap();
    let (alpha8, _) = special_elements(c8);
    let target = to_field_element(&alpha8.scale(&BigInt::from(2))).unwrap();
    let all = all_sos_decompositions(&target).unwrap();
    assert_eq!(all.len(), 1, "expected a unique decomposition at q = 8");
    let field = cosine_field(c8).unwrap();
    let one = Element::one(&field);
    let one_plus_omega =
        Element::from_integral_coords(&field, &[BigInt::one(), BigInt::one()]);
    assert_eq!(all[0].parts(), &[one_plus_omega, one]);

    // q = 16 and q = 32: the exhaustive search proves there is none.
    for q in [16u64, 32] {
        let c = Conductor::new(q).unwrap();
        let (alpha, _) = special_elements(c);
        let target = to_field_element(&alpha.scale(&BigInt::from(2))).unwrap();
        assert_eq!(
            decide_sos(&target).unwrap(),
            Decision::NotRepresentable,
            "2*alpha must not be a sum of squares at conductor {q}"
        );
    }
}

#[test]
fn doubled_alpha_at_prime_conductors_is_representable_only_at_seven() {
    // p = 7 is the one prime conductor where 2*alpha is a sum of squares
    // (consistent with the cubic field of conductor 7 passing the sieve).
    let c7 = Conductor::new(7).unwrap();
    let (alpha7, _) = special_elements(c7);
    let target = to_field_element(&alpha7.scale(&BigInt::from(2))).unwrap();
    let all = all_sos_decompositions(&target).unwrap();
    assert_eq!(all.len(), 1, "expected a unique decomposition at q = 7");
    // 4 - 2w = (1 - w^2)^2 + (2 - w^2)^2 + 1^2, where w = 2cos(2*pi/7).
    let field = target.field();
    let part = |coords: [i64; 3]| {
        Element::from_integral_coords(field, &coords.map(BigInt::from))
    };
    assert_eq!(
        all[0].parts(),
        &[part([1, 0, -1]), part([2, 0, -1]), part([1, 0, 0])]
    );
    let mut sum = Element::zero(field);
    for p in all[0].parts() {
        sum = sum.add(&p.mul(p));
    }
    assert_eq!(sum, target);

    // p = 11 and p = 13: the exhaustive search proves there is none.
    for p in [11u64, 13] {
        let c = Conductor::new(p).unwrap();
        let (alpha, _) = special_elements(c);
        let target = to_field_element(&alpha.scale(&BigInt::from(2))).unwrap();
        assert_eq!(
            decide_sos(&target).unwrap(),
            Decision::NotRepresentable,
            "2*alpha must not be a sum of squares at conductor {p}"
        );
    }
}

#[test]
fn parity_obstruction_implies_not_representable() {
    // Exhaustive check on conductors 8 and 16 for all totally positive
    // integers of trace <= 30: whenever some odd-indexed coefficient is
    // odd, the complete search must agree that the element is not a sum of
    // squares.
    let mut obstructed_cases = 0usize;
    for q in [8u64, 16] {
        let c = Conductor::new(q).unwrap();
        let field = cosine_field(c).unwrap();
        let bound = 30;
        for gamma in totally_positive_with_trace_at_most(&field, bound) {
            let as_cosine = from_field_element(c, &gamma).unwrap();
            if parity_obstruction(&as_cosine).unwrap() {
                assert_eq!(
                    decide_sos(&gamma).unwrap(),
                    Decision::NotRepresentable,
                    "parity-obstructed element represented: {gamma} at conductor {q}"
                );
                obstructed_cases += 1;
            }
        }
    }
    assert!(
        obstructed_cases >= 200,
        "only {obstructed_cases} obstructed cases exercised"
    );
}
