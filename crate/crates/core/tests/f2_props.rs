mod common;

use std::collections::BTreeSet;

use common::{sized, vec2n};
use pauli_ramsey::f2::{self, twisted_dot, BitVec2n, CosetSpace, F2Basis};
use proptest::prelude::*;

fn vecs(n: usize, max: usize) -> impl Strategy<Value = Vec<BitVec2n>> {
    prop::collection::vec(vec2n(n), 0..=max)
}

proptest! {
    #[test]
    fn twisted_dot_is_bilinear_and_alternating(
        (_, (u, v, w)) in sized(1, 6, |n| (vec2n(n), vec2n(n), vec2n(n)))
    ) {
        let lhs = twisted_dot(&(u + v), &w).unwrap();
        let rhs = twisted_dot(&u, &w).unwrap() ^ twisted_dot(&v, &w).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(!twisted_dot(&v, &v).unwrap());
        prop_assert_eq!(twisted_dot(&u, &v).unwrap(), twisted_dot(&v, &u).unwrap());
    }

    #[test]
    fn kernel_rank_nullity((n, gens) in sized(1, 6, |n| vecs(n, 2 * n))) {
        let b = F2Basis::reduce(n, &gens).unwrap();
        let ker = f2::twisted_kernel(n, b.vectors()).unwrap();
        prop_assert_eq!(ker.rank() + b.rank(), 2 * n);
        for k in ker.vectors() {
            for g in b.vectors() {
                prop_assert!(!k.twisted(g));
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_span_preserving(
        (n, (gens, probes)) in sized(1, 5, |n| (vecs(n, 2 * n), vecs(n, 8)))
    ) {
        let b = F2Basis::reduce(n, &gens).unwrap();
        prop_assert_eq!(&F2Basis::reduce(n, b.vectors()).unwrap(), &b);
        prop_assert_eq!(&b.canonical(), &b);
        for g in &gens {
            prop_assert!(f2::in_span(g, &b).unwrap());
        }
        // a probe is in span(gens) iff adding it does not raise the rank
        for p in &probes {
            let mut more = gens.clone();
            more.push(*p);
            let grew = F2Basis::reduce(n, &more).unwrap().rank() > b.rank();
            prop_assert_eq!(f2::in_span(p, &b).unwrap(), !grew);
        }
    }

    #[test]
    fn span_has_two_to_the_rank_elements((n, gens) in sized(1, 4, |n| vecs(n, 5))) {
        let b = F2Basis::reduce(n, &gens).unwrap();
        let elems: BTreeSet<BitVec2n> = b.span_elements().into_iter().collect();
        prop_assert_eq!(elems.len(), 1 << b.rank());
    }

    #[test]
    fn smallest_outside_is_the_minimum(
        (n, (outer, inner)) in sized(1, 3, |n| (vecs(n, 4), vecs(n, 3)))
    ) {
        let outer = F2Basis::reduce(n, &outer).unwrap();
        let inner = F2Basis::reduce(n, &inner).unwrap();
        let brute = outer
            .span_elements()
            .into_iter()
            .filter(|v| !inner.contains(v).unwrap())
            .min();
        prop_assert_eq!(f2::smallest_outside(&outer, &inner), brute);
    }

    #[test]
    fn coset_signatures_separate_cosets(
        (n, (sub, probes)) in sized(1, 3, |n| (vecs(n, 3), vecs(n, 6)))
    ) {
        let sub = F2Basis::reduce(n, &sub).unwrap();
        let ambient = F2Basis::reduce(n, &[sub.vectors(), &probes[..]].concat()).unwrap();
        let cs = CosetSpace::new(&sub, &ambient).unwrap();
        prop_assert_eq!(cs.quotient_dim(), ambient.rank() - sub.rank());
        for u in &probes {
            for v in &probes {
                let same = cs.signature(u).unwrap() == cs.signature(v).unwrap();
                prop_assert_eq!(same, sub.contains(&(*u + *v)).unwrap());
            }
        }
    }
}

/// All isotropic d-dimensional subspaces by brute force over ordered tuples.
fn brute_isotropic(n: usize, d: usize) -> BTreeSet<F2Basis> {
    fn go(n: usize, d: usize, acc: &mut Vec<BitVec2n>, out: &mut BTreeSet<F2Basis>) {
        if acc.len() == d {
            let b = F2Basis::reduce(n, acc).unwrap();
            if b.rank() == d && b.is_isotropic() {
                out.insert(b);
            }
            return;
        }
        for v in BitVec2n::all(n) {
            acc.push(v);
            go(n, d, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

#[test]
fn enumeration_matches_naive_filter() {
    for n in 1..=2 {
        for d in 0..=n {
            let listed = f2::enumerate_isotropic(n, d).unwrap();
            let set: BTreeSet<F2Basis> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates at n={n} d={d}");
            assert_eq!(set, brute_isotropic(n, d), "n={n} d={d}");
            assert!(
                listed.windows(2).all(|w| w[0] < w[1]),
                "unsorted at n={n} d={d}"
            );
        }
    }
}

#[test]
fn isotropic_counts() {
    // number of d-dim isotropic subspaces of F_2^{2n}: prod_{i<d} (2^{2(n-i)} - 1) / (2^{i+1} - 1)
    let count = |n: u32, d: u32| -> usize {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..d {
            num *= (1u64 << (2 * (n - i))) - 1;
            den *= (1u64 << (i + 1)) - 1;
        }
        (num / den) as usize
    };
    for n in 1..=4 {
        for d in 0..=n {
            assert_eq!(
                f2::enumerate_isotropic(n as usize, d as usize)
                    .unwrap()
                    .len(),
                count(n, d),
                "n={n} d={d}"
            );
        }
    }
    assert_eq!(count(3, 1), 63);
    assert_eq!(count(3, 2), 315);
    assert_eq!(count(3, 3), 135);
    assert!(f2::enumerate_isotropic(2, 3).is_err());
}
