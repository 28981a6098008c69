//! Randomized property suites for the rewriting operations, homology
//! oracles, and geography closed forms.

mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn hurwitz_preserves_identity_and_type(
        choice in any::<u8>(),
        pos in any::<usize>(),
        forward in any::<bool>(),
    ) {
        check_hurwitz_preserves(choice, pos, forward).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn rotation_preserves_identity_and_type(choice in any::<u8>(), k in 0usize..64) {
        check_rotation_preserves(choice, k).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn conjugation_preserves_identity_and_type(
        choice in any::<u8>(),
        phi in mcg_word(4),
    ) {
        check_conjugation_preserves(choice, &phi).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn fiber_sum_is_type_additive(
        a in any::<u8>(),
        b in any::<u8>(),
        phi in mcg_word(3),
    ) {
        check_fiber_sum_additivity(a, b, &phi).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn chain_substitution_delta(phi in mcg_word(3)) {
        check_chain_delta(&phi).map_err(TestCaseError::fail)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    #[test]
    fn transvections_are_symplectic(class in prop::array::uniform4(-9i64..=9)) {
        check_transvection_symplectic(class).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn snf_matches_modular_rank_oracle(
        m in prop::collection::vec(prop::collection::vec(-6i64..=6, 1..=6), 1..=5)
            .prop_map(|rows| {
                let cols = rows.iter().map(|r| r.len()).min().unwrap_or(0);
                rows.into_iter().map(|mut r| { r.truncate(cols); r }).collect::<Vec<_>>()
            }),
    ) {
        check_snf_against_modular_rank(m).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn invariant_identities_up_to_200() {
    check_invariant_identities(200).unwrap();
}
