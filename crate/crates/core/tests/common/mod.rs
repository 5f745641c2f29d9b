#![allow(dead_code)]

use pauli_ramsey::f2::{self, BitVec2n};
use pauli_ramsey::{PauliChannel, PauliOperator, StabilizerGroup};
use proptest::prelude::*;

pub fn vec2n(n: usize) -> impl Strategy<Value = BitVec2n> {
    (0u64..1 << (2 * n)).prop_map(move |w| BitVec2n::from_word(n, w).unwrap())
}

pub fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (0u8..4, vec2n(n)).prop_map(|(k, v)| PauliOperator::new(k, v))
}

/// Channels with distinct-or-not random operators and random phases.
pub fn channel(n: usize, max_ops: usize) -> impl Strategy<Value = PauliChannel> {
    prop::collection::vec((pauli(n), 1u32..100), 1..=max_ops).prop_map(move |ops| {
        let total: u32 = ops.iter().map(|(_, w)| w).sum();
        let noise = ops
            .into_iter()
            .map(|(g, w)| (g, w as f64 / total as f64))
            .collect();
        PauliChannel::new(n, noise).unwrap()
    })
}

/// Greedy isotropic independent subset of random vectors, with random signs.
pub fn stabilizer(n: usize) -> impl Strategy<Value = StabilizerGroup> {
    (
        prop::collection::vec(vec2n(n), 0..=n),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(move |(vs, signs)| {
            let mut kept: Vec<BitVec2n> = Vec::new();
            for v in vs {
                if v.is_zero() || kept.iter().any(|u| u.twisted(&v)) {
                    continue;
                }
                let mut trial = kept.clone();
                trial.push(v);
                if f2::F2Basis::reduce(n, &trial).unwrap().rank() == trial.len() {
                    kept = trial;
                }
            }
            let gens: Vec<PauliOperator> = kept
                .iter()
                .zip(&signs)
                .map(|(&v, &neg)| {
                    let g = PauliOperator::from_check_vector(v);
                    if neg {
                        g.negate()
                    } else {
                        g
                    }
                })
                .collect();
            StabilizerGroup::validate(n, &gens).unwrap()
        })
}

/// `(n, value)` pairs with n drawn from `lo..=hi`.
pub fn sized<S, F>(lo: usize, hi: usize, f: F) -> impl Strategy<Value = (usize, S::Value)>
where
    S: Strategy,
    F: Fn(usize) -> S + Clone + 'static,
    S::Value: Clone,
{
    (lo..=hi).prop_flat_map(move |n| (Just(n), f(n)))
}

pub fn hermitian_paulis(n: usize) -> Vec<PauliOperator> {
    BitVec2n::all(n)
        .map(PauliOperator::from_check_vector)
        .collect()
}
