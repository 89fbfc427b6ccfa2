//! Randomized roundtrip and transport invariants for the mechanical
//! layers: insertion, stacking, biwords, serialization.

use proptest::prelude::*;

use matrix_crystal::crystal::{Alphabet, Dir, Word};
use matrix_crystal::matrix::{BiwordKind, FoldedMatrix, SparseMatrix};
use matrix_crystal::pp::{self, PlanePartition};
use matrix_crystal::shapes::Partition;
use matrix_crystal::verma::{within_level, BiTableau};
use matrix_crystal::rsk;

fn matrices() -> impl Strategy<Value = SparseMatrix> {
    prop::collection::btree_map((1u32..=5, 1u32..=5), 1u64..=3, 0..6)
        .prop_map(|cells| SparseMatrix::new(cells).unwrap())
}

fn symmetric_matrices() -> impl Strategy<Value = SparseMatrix> {
    matrices().prop_map(|a| {
        let doubled = a
            .entries()
            .flat_map(|((i, j), v)| [((i, j), v), ((j, i), v)])
            .collect::<Vec<_>>();
        SparseMatrix::new(doubled).unwrap()
    })
}

fn partitions() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..6).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn words() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 0..8)
        .prop_map(|values| Word::new(Alphabet::Full, values).unwrap())
}

proptest! {
    #[test]
    fn insertion_roundtrips(a in matrices()) {
        let (p, q) = rsk::rsk(&a);
        prop_assert_eq!(p.outer(), q.outer());
        prop_assert_eq!(rsk::rsk_inverse(&p, &q).unwrap(), a.clone());
        prop_assert_eq!(p.weight() + q.weight(), a.weight());
    }

    #[test]
    fn stacking_roundtrips(a in matrices()) {
        let stack = pp::from_matrix(&a);
        prop_assert_eq!(pp::to_matrix(&stack), a.clone());
        prop_assert!(stack.norm() >= a.sum());
        prop_assert_eq!(stack.weight(), a.weight());
        prop_assert_eq!(PlanePartition::from_layers(&stack.layers()).unwrap(), stack);
    }

    #[test]
    fn biwords_sort_and_rebuild(a in matrices()) {
        for kind in [BiwordKind::ColumnMajor, BiwordKind::RowMajor] {
            let listing = a.to_biword(kind);
            prop_assert_eq!(listing.len() as u64, a.sum());
            prop_assert_eq!(listing.matrix(), a.clone());
        }
    }

    #[test]
    fn matrix_operators_invert(a in matrices(), i in -5i64..=5) {
        if let Some(down) = a.apply(i, Dir::Lower) {
            prop_assert_eq!(down.apply(i, Dir::Raise), Some(a.clone()));
        }
        if let Some(up) = a.apply(i, Dir::Raise) {
            prop_assert_eq!(up.apply(i, Dir::Lower), Some(a.clone()));
        }
    }

    #[test]
    fn word_operators_invert(word in words(), i in -4i64..=4) {
        if let Some(down) = word.apply(i, Dir::Lower) {
            prop_assert_eq!(down.apply(i, Dir::Raise), Some(word.clone()));
        }
        if let Some(up) = word.apply(i, Dir::Raise) {
            prop_assert_eq!(up.apply(i, Dir::Lower), Some(word.clone()));
        }
    }

    #[test]
    fn frobenius_and_conjugation_roundtrip(p in partitions()) {
        prop_assert_eq!(p.frobenius().decode(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        let direct = p.frobenius();
        let flipped = p.conjugate().frobenius();
        prop_assert_eq!(direct.alpha(), flipped.beta());
        prop_assert_eq!(direct.beta(), flipped.alpha());
    }

    #[test]
    fn serde_preserves_the_core_types(a in matrices()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<SparseMatrix>(&json).unwrap(), a.clone());
        let pair = BiTableau::from_matrix(&a);
        let json = serde_json::to_string(&pair).unwrap();
        prop_assert_eq!(&serde_json::from_str::<BiTableau>(&json).unwrap(), &pair);
        let stack = pp::from_matrix(&a);
        let json = serde_json::to_string(&stack).unwrap();
        prop_assert_eq!(serde_json::from_str::<PlanePartition>(&json).unwrap(), stack);
    }

    #[test]
    fn symmetric_insertion_respects_the_fold(a in symmetric_matrices(), epsilon in 1u32..=2) {
        let m = FoldedMatrix::new(a, epsilon).unwrap();
        let recording = rsk::symmetric_tableau(&m);
        let shape = rsk::symmetric_shape(&m);
        prop_assert_eq!(recording.outer(), &shape);
        prop_assert!(shape.parts().iter().all(|&part| part % epsilon == 0));
        let pair = BiTableau::from_matrix(m.base());
        prop_assert_eq!(pair.t(), &recording);
    }

    #[test]
    fn level_bounds_transport(a in matrices(), n in 1u32..=3) {
        let columns = rsk::column_count(&a);
        prop_assert_eq!(within_level(&a, n), columns <= n);
        prop_assert_eq!(pp::from_matrix(&a).max_entry(), columns);
    }
}
