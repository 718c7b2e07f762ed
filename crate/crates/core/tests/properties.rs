mod support;

use embedcheck::catalog::{h1_of_surgery, shipped_catalog};
use embedcheck::parse_word;
use embedcheck::presentation::abelianize;
use embedcheck::GroupPresentation;
use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fox_fundamental_identity(case in fox_case()) {
        check_fox_identity(case)?;
    }

    #[test]
    fn integer_snf_certified(a in int_matrix()) {
        check_integer_snf(a)?;
    }

    #[test]
    fn rational_laurent_snf_certified(raw in laurent_matrix()) {
        check_rational_laurent_snf(raw)?;
    }

    #[test]
    fn schreier_counts(case in cover_case()) {
        check_schreier_counts(case)?;
    }

    #[test]
    fn crowell_rank_bookkeeping(case in crowell_case()) {
        check_crowell_rank(case)?;
    }

    #[test]
    fn surgery_homology_is_linking_cokernel(case in framing_case()) {
        check_surgery_homology(case)?;
    }

    #[test]
    fn substitution_functorial(case in substitution_case()) {
        check_substitution(case)?;
    }

    #[test]
    fn free_reduction_inverts(w in word(3, 12)) {
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert!(w.inverse().mul(&w).is_identity());
    }

    #[test]
    fn parse_display_round_trip(w in word(3, 12)) {
        let names = ["a", "b", "c"];
        prop_assert_eq!(parse_word(&w.display(&names).to_string(), &names).unwrap(), w);
    }

    #[test]
    fn abelianization_survives_tietze_perturbation(p in presentation(), conj in word(3, 4), flip in any::<bool>()) {
        let g = p.num_generators();
        let conj = embedcheck::Word::from_letters(conj.letters().iter().copied().filter(|&(h, _)| h < g));
        let rels = p.relators().iter().map(|r| {
            let r = r.conjugate_by(&conj);
            if flip { r.inverse() } else { r }
        });
        let q = GroupPresentation::new(p.names().to_vec(), rels.collect()).unwrap();
        let (a, b) = (abelianize(&p), abelianize(&q));
        prop_assert_eq!((a.free_rank, a.torsion), (b.free_rank, b.torsion));
    }

    #[test]
    fn generator_images_kill_relators(p in presentation()) {
        let ab = abelianize(&p);
        let g = p.num_generators();
        for r in p.relators() {
            prop_assert!(ab.coordinates(&r.exponent_sums(g)).iter().all(|c| *c == 0.into()));
        }
    }
}

#[test]
fn catalog_homology_matches_linking_matrices() {
    for e in shipped_catalog() {
        h1_of_surgery(&e).unwrap_or_else(|err| panic!("{}: {err}", e.name));
    }
}
