//! Brute-force verification on dense `2^n × 2^n` complex matrices.
//!
//! Nothing here consults check vectors or cosets: products are dense matrix
//! products, compressions are `P·M·P`, and dimensions are numerical ranks of
//! Gram matrices under `<A, B> = Tr(A† B)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::channel::{maximal_stabilizer_channel, PauliChannel};
use crate::error::{Error, Result};
use crate::pauli::{DenseMatrix, PauliOperator, DEFAULT_DENSE_LIMIT};
use crate::ramsey::{full_dimension, ClassificationResult, Verdict};
use crate::stabilizer::StabilizerGroup;

/// Singular values above `rel_tol × largest` count toward the rank.
pub const DEFAULT_RANK_TOLERANCE: f64 = 1e-9;

/// Threshold for "non-zero" overlaps in the private-code check.
pub const OVERLAP_THRESHOLD: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct GramRankResult {
    pub rank: usize,
    /// Descending.
    pub singular_values: Vec<f64>,
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub max_qubits: usize,
    pub rel_tol: f64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_qubits: DEFAULT_DENSE_LIMIT,
            rel_tol: DEFAULT_RANK_TOLERANCE,
        }
    }
}

impl Oracle {
    fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_qubits {
            return Err(Error::Capacity {
                what: "oracle qubit count",
                requested: n,
                limit: self.max_qubits,
            });
        }
        Ok(())
    }

    fn dense(&self, g: &PauliOperator) -> Result<DenseMatrix> {
        g.to_dense_within(self.max_qubits)
    }

    fn noise_matrices(&self, phi: &PauliChannel) -> Result<Vec<DenseMatrix>> {
        phi.operators().iter().map(|e| self.dense(e)).collect()
    }

    /// Dense `Eᵢ† Eⱼ` for all ordered pairs.
    fn products(&self, phi: &PauliChannel) -> Result<Vec<DenseMatrix>> {
        let es = self.noise_matrices(phi)?;
        let mut out = Vec::with_capacity(es.len() * es.len());
        for a in &es {
            let a_dag = a.adjoint();
            for b in &es {
                out.push(&a_dag * b);
            }
        }
        Ok(out)
    }

    /// Rank of the Gram matrix of `mats`.
    pub fn gram_rank(&self, mats: &[DenseMatrix]) -> GramRankResult {
        gram_rank(mats, self.rel_tol)
    }

    /// `dim G_φ = dim span{Eᵢ† Eⱼ}`.
    pub fn graph_rank(&self, phi: &PauliChannel) -> Result<GramRankResult> {
        self.check_size(phi.n())?;
        Ok(self.gram_rank(&self.products(phi)?))
    }

    /// `dim span(G_φ ∪ G_ψ)`; equal graphs have this equal to both ranks.
    pub fn joint_graph_rank(
        &self,
        phi: &PauliChannel,
        psi: &PauliChannel,
    ) -> Result<GramRankResult> {
        self.check_size(phi.n().max(psi.n()))?;
        let mut mats = self.products(phi)?;
        mats.extend(self.products(psi)?);
        Ok(self.gram_rank(&mats))
    }

    /// `dim(P G_φ P)` from `P·Eᵢ†Eⱼ·P` over all pairs.
    pub fn compressed_dimension(
        &self,
        phi: &PauliChannel,
        r: &StabilizerGroup,
    ) -> Result<GramRankResult> {
        let p = self.projector(phi, r)?;
        let mats: Vec<DenseMatrix> = self.products(phi)?.iter().map(|m| &p * m * &p).collect();
        Ok(self.gram_rank(&mats))
    }

    fn projector(&self, phi: &PauliChannel, r: &StabilizerGroup) -> Result<DenseMatrix> {
        if phi.n() != r.n() {
            return Err(Error::SizeMismatch {
                expected: phi.n(),
                found: r.n(),
            });
        }
        self.check_size(phi.n())?;
        r.projector_within(self.max_qubits)
    }

    /// Knill–Laflamme: every `P Eᵢ†Eⱼ P` equals `cᵢⱼ P` up to
    /// `rel_tol · ‖P‖_F` in Frobenius norm.
    pub fn kl_check(&self, phi: &PauliChannel, r: &StabilizerGroup) -> Result<bool> {
        let p = self.projector(phi, r)?;
        let trace_p = p.trace();
        let p_norm = p.norm();
        for m in self.products(phi)? {
            let c = &p * m * &p;
            let scalar = c.trace() / trace_p;
            if (&c - &p * scalar).norm() > self.rel_tol * p_norm {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Samples `samples` orthonormal pairs `|a⟩, |b⟩` in the code and
    /// requires, for each, some `i, j` with `|⟨a|Eⱼ†Eᵢ|b⟩| > 1e-9`.
    ///
    /// Sampling can refute privacy but never proves it.
    /// Re-checks a classification on dense matrices: witness compressed
    /// dimensions for cliques and anticliques, equal graph ranks (separately
    /// and jointly) for maximal-stabilizer channels. Returns a description of
    /// the first disagreement.
    pub fn audit_classification(
        &self,
        psi: &PauliChannel,
        result: &ClassificationResult,
    ) -> Result<Option<String>> {
        let Some(r) = &result.witness else {
            return Ok(Some("no witness to audit".into()));
        };
        match result.verdict {
            Verdict::Anticlique | Verdict::Clique => {
                let want = if result.verdict == Verdict::Anticlique {
                    1
                } else {
                    full_dimension(r.k())
                };
                let got = self.compressed_dimension(psi, r)?.rank;
                if got != want || r.k() == 0 {
                    return Ok(Some(format!(
                        "dense dim(PGP) = {got}, expected {want} for k = {}",
                        r.k()
                    )));
                }
            }
            Verdict::MaximalStabilizerChannel => {
                let phi = maximal_stabilizer_channel(r, None)?;
                let a = self.graph_rank(psi)?.rank;
                let b = self.graph_rank(&phi)?.rank;
                let joint = self.joint_graph_rank(psi, &phi)?.rank;
                if !(a == b && b == joint) {
                    return Ok(Some(format!("graph ranks {a}, {b}, joint {joint} differ")));
                }
            }
            Verdict::Inconsistent => return Ok(Some("classification is inconsistent".into())),
        }
        Ok(None)
    }

    pub fn private_witness_check(
        &self,
        phi: &PauliChannel,
        r: &StabilizerGroup,
        samples: usize,
        seed: u64,
    ) -> Result<bool> {
        if r.k() == 0 {
            return Err(Error::input("private-code check needs code dimension >= 2"));
        }
        let p = self.projector(phi, r)?;
        let code = orthonormal_range(&p, 1usize << r.k());
        let products = self.products(phi)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = normalized(&(&code * random_coefficients(&mut rng, code.ncols())));
            let b = &code * random_coefficients(&mut rng, code.ncols());
            let overlap = a.dotc(&b);
            let b = normalized(&(b - &a * overlap));
            let witnessed = products.iter().any(|m| {
                // ⟨a| Eⱼ†Eᵢ |b⟩ ranges over the same set as ⟨a| Eᵢ†Eⱼ |b⟩
                a.dotc(&(m * &b)).norm() > OVERLAP_THRESHOLD
            });
            if !witnessed {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Numerical rank of the Gram matrix `Gₚq = Tr(Mₚ† M_q)`.
///
/// When there are more matrices than matrix entries, the dual Gram matrix
/// (over entries instead of matrices) is decomposed instead; it has the same
/// rank.
pub fn gram_rank(mats: &[DenseMatrix], rel_tol: f64) -> GramRankResult {
    if mats.is_empty() {
        return GramRankResult {
            rank: 0,
            singular_values: Vec::new(),
        };
    }
    let entries = mats[0].len();
    // Rows of `a` are the vectorized matrices.
    let a = DMatrix::<Complex64>::from_fn(mats.len(), entries, |p, e| mats[p][e]);
    let gram = if mats.len() <= entries {
        a.conjugate() * a.transpose()
    } else {
        a.adjoint() * &a
    };
    let mut singular_values: Vec<f64> = gram.singular_values().iter().copied().collect();
    singular_values.sort_by(|x, y| y.total_cmp(x));
    let largest = singular_values.first().copied().unwrap_or(0.0);
    let rank = if largest == 0.0 {
        0
    } else {
        singular_values
            .iter()
            .filter(|&&s| s > rel_tol * largest)
            .count()
    };
    GramRankResult {
        rank,
        singular_values,
    }
}

fn random_coefficients(rng: &mut impl Rng, dim: usize) -> nalgebra::DVector<Complex64> {
    nalgebra::DVector::from_fn(dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

fn normalized(v: &nalgebra::DVector<Complex64>) -> nalgebra::DVector<Complex64> {
    v / Complex64::new(v.norm(), 0.0)
}

/// Orthonormal basis (as columns) of the range of a projector, by
/// Gram–Schmidt over its columns.
fn orthonormal_range(p: &DenseMatrix, rank: usize) -> DenseMatrix {
    let mut basis: Vec<nalgebra::DVector<Complex64>> = Vec::with_capacity(rank);
    for col in p.column_iter() {
        let mut v: nalgebra::DVector<Complex64> = col.into_owned();
        for b in &basis {
            let c = b.dotc(&v);
            v -= b * c;
        }
        if v.norm() > 1e-9 {
            basis.push(normalized(&v));
        }
        if basis.len() == rank {
            break;
        }
    }
    DenseMatrix::from_columns(&basis)
}

pub fn dense_compressed_dimension(
    phi: &PauliChannel,
    r: &StabilizerGroup,
) -> Result<GramRankResult> {
    Oracle::default().compressed_dimension(phi, r)
}

pub fn kl_check(phi: &PauliChannel, r: &StabilizerGroup) -> Result<bool> {
    Oracle::default().kl_check(phi, r)
}

pub fn private_witness_check(
    phi: &PauliChannel,
    r: &StabilizerGroup,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    Oracle::default().private_witness_check(phi, r, samples, seed)
}
