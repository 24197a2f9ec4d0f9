//! Property-based invariants of the exact linear algebra layer and the
//! closure operators.

use mpj_core::exactlin::{complement, intersect, kernel, rref, QMatrix};
use mpj_core::families::{generate, Family};
use mpj_core::{QVec, Subspace};
use proptest::prelude::*;

const DIM: usize = 4;

fn small_vec() -> impl Strategy<Value = QVec> {
    proptest::collection::vec(-4i64..=4, DIM).prop_map(|v| QVec::from_i64(&v))
}

fn small_matrix() -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec(small_vec(), 1..=5)
        .prop_map(|rows| QMatrix::from_rows(rows, DIM))
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix()) {
        let rank = rref(&m).dim();
        let nullity = kernel(&m).dim();
        prop_assert_eq!(rank + nullity, DIM);
    }

    #[test]
    fn rref_is_idempotent_and_canonical(m in small_matrix()) {
        let s = rref(&m);
        let again = rref(&QMatrix::from_rows(s.basis().to_vec(), DIM));
        prop_assert_eq!(&s, &again);
        // every original row lies in the row space
        for row in m.rows() {
            prop_assert!(s.contains(row));
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix()) {
        for v in kernel(&m).basis() {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn intersection_is_the_largest_common_subspace(
        m1 in small_matrix(),
        m2 in small_matrix(),
    ) {
        let s = rref(&m1);
        let t = rref(&m2);
        let meet = intersect(&s, &t).unwrap();
        prop_assert!(s.contains_subspace(&meet));
        prop_assert!(t.contains_subspace(&meet));
        // modular dimension bound: dim(s∩t) = dim s + dim t − dim(s+t)
        prop_assert_eq!(meet.dim(), s.dim() + t.dim() - s.sum(&t).dim());
    }

    #[test]
    fn complement_splits_the_ambient_space(m in small_matrix()) {
        let s = rref(&m);
        let full = Subspace::full(DIM);
        let c = complement(&s, &full).unwrap();
        prop_assert_eq!(s.dim() + c.dim(), DIM);
        prop_assert!(intersect(&s, &c).unwrap().is_zero());
        prop_assert_eq!(s.sum(&c), full);
    }

    #[test]
    fn ideal_closure_is_a_closure_operator(rows in proptest::collection::vec(
        proptest::collection::vec(-3i64..=3, 7).prop_map(|v| QVec::from_i64(&v)),
        1..=2,
    )) {
        let a = generate(Family::MalcevM7).unwrap().algebra;
        let seed = Subspace::span(&rows, 7);
        let closed = a.ideal_closure(&seed).unwrap();
        // extensive
        prop_assert!(closed.contains_subspace(&seed));
        // idempotent
        prop_assert_eq!(&a.ideal_closure(&closed).unwrap(), &closed);
        // monotone against the zero seed
        prop_assert!(closed.contains_subspace(&a.ideal_closure(&Subspace::zero(7)).unwrap()));
    }

    #[test]
    fn bracket_bilinearity_on_m7(u in proptest::collection::vec(-3i64..=3, 7),
                                 v in proptest::collection::vec(-3i64..=3, 7),
                                 w in proptest::collection::vec(-3i64..=3, 7)) {
        let a = generate(Family::MalcevM7).unwrap().algebra;
        let (u, v, w) = (QVec::from_i64(&u), QVec::from_i64(&v), QVec::from_i64(&w));
        let lhs = a.bracket(&u.add(&v), &w).unwrap();
        let rhs = a.bracket(&u, &w).unwrap().add(&a.bracket(&v, &w).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(a.bracket(&u, &u).unwrap().is_zero());
    }
}
