//! Pauli channels `x ↦ Σ λᵢ Eᵢ x Eᵢ†` and their difference sets.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::f2::BitVec2n;
use crate::pauli::{DenseMatrix, PauliOperator, DEFAULT_DENSE_LIMIT};
use crate::stabilizer::StabilizerGroup;

/// Allowed deviation of the weight sum from 1.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// A mixed-unitary channel with Pauli noise operators.
///
/// Noise operators are pairwise distinct up to phase; duplicates are merged
/// at construction by summing their weights (the first occurrence's phase is
/// kept).
#[derive(Clone, Debug, PartialEq)]
pub struct PauliChannel {
    n: usize,
    noise: Vec<(PauliOperator, f64)>,
}

/// `{r(Eᵢ) + r(Eⱼ)}`: the check-vector image of `{Eᵢ† Eⱼ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceSet(BTreeSet<BitVec2n>);

impl DifferenceSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &BitVec2n) -> bool {
        self.0.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &BitVec2n> {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<BitVec2n> {
        self.0.iter().copied().collect()
    }
}

impl PauliChannel {
    pub fn new(n: usize, noise: Vec<(PauliOperator, f64)>) -> Result<Self> {
        if noise.is_empty() {
            return Err(Error::schema(
                "noise",
                "at least one noise operator is required",
            ));
        }
        let mut merged: Vec<(PauliOperator, f64)> = Vec::with_capacity(noise.len());
        for (i, (op, w)) in noise.into_iter().enumerate() {
            if op.n() != n {
                return Err(Error::schema(
                    format!("noise[{i}].op"),
                    format!("operator {op} acts on {} qubits, expected {n}", op.n()),
                ));
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::schema(
                    format!("noise[{i}].weight"),
                    format!("weight must be positive and finite, got {w}"),
                ));
            }
            match merged
                .iter_mut()
                .find(|(e, _)| e.check_vector() == op.check_vector())
            {
                Some((_, acc)) => *acc += w,
                None => merged.push((op, w)),
            }
        }
        let total: f64 = merged.iter().map(|(_, w)| w).sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::schema(
                "noise",
                format!("weights sum to {total}, expected 1"),
            ));
        }
        Ok(PauliChannel { n, noise: merged })
    }

    /// Equal weights over `ops` (after merging duplicates up to phase).
    pub fn uniform(n: usize, ops: &[PauliOperator]) -> Result<Self> {
        let mut distinct: Vec<PauliOperator> = Vec::with_capacity(ops.len());
        for op in ops {
            if !distinct
                .iter()
                .any(|e| e.check_vector() == op.check_vector())
            {
                distinct.push(*op);
            }
        }
        let w = 1.0 / distinct.len().max(1) as f64;
        Self::new(n, distinct.into_iter().map(|op| (op, w)).collect())
    }

    /// The identity channel on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliChannel {
            n,
            noise: vec![(PauliOperator::identity(n), 1.0)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn noise(&self) -> &[(PauliOperator, f64)] {
        &self.noise
    }

    pub fn operators(&self) -> Vec<PauliOperator> {
        self.noise.iter().map(|(e, _)| *e).collect()
    }

    /// Parses the channel JSON document.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::schema("$", format!("malformed JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let root = value
            .as_object()
            .ok_or_else(|| Error::schema("$", "expected an object"))?;
        reject_unknown(root, &["n", "noise"], "")?;
        let n = root
            .get("n")
            .and_then(Value::as_u64)
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::schema("n", "expected a positive integer"))?
            as usize;
        let entries = root
            .get("noise")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::schema("noise", "expected an array"))?;
        if entries.is_empty() {
            return Err(Error::schema(
                "noise",
                "at least one noise operator is required",
            ));
        }

        let mut parsed: Vec<(PauliOperator, Option<f64>)> = Vec::with_capacity(entries.len());
        for (i, entry) in entries.iter().enumerate() {
            let path = format!("noise[{i}]");
            let (op_text, weight) = match entry {
                Value::String(s) => (s.as_str(), None),
                Value::Object(obj) => {
                    reject_unknown(obj, &["op", "weight"], &path)?;
                    let op = obj.get("op").and_then(Value::as_str).ok_or_else(|| {
                        Error::schema(format!("{path}.op"), "expected a Pauli string")
                    })?;
                    let w = match obj.get("weight") {
                        None => None,
                        Some(v) => Some(v.as_f64().ok_or_else(|| {
                            Error::schema(format!("{path}.weight"), "expected a number")
                        })?),
                    };
                    (op, w)
                }
                _ => {
                    return Err(Error::schema(
                        path,
                        "expected a Pauli string or an {\"op\", \"weight\"} object",
                    ))
                }
            };
            let op: PauliOperator = op_text
                .parse()
                .map_err(|e| Error::schema(format!("{path}.op"), format!("{e}")))?;
            if op.n() != n {
                return Err(Error::schema(
                    format!("{path}.op"),
                    format!("{op_text:?} has length {}, expected {n}", op.n()),
                ));
            }
            parsed.push((op, weight));
        }

        let weighted = parsed.iter().filter(|(_, w)| w.is_some()).count();
        let noise = if weighted == 0 {
            let w = 1.0 / parsed.len() as f64;
            parsed.into_iter().map(|(op, _)| (op, w)).collect()
        } else if weighted == parsed.len() {
            parsed.into_iter().map(|(op, w)| (op, w.unwrap())).collect()
        } else {
            return Err(Error::schema(
                "noise",
                "weights must be given for every entry or for none",
            ));
        };
        Self::new(n, noise)
    }

    pub fn to_json(&self) -> Value {
        let noise: Vec<Value> = self
            .noise
            .iter()
            .map(|(op, w)| json!({"op": op.to_string(), "weight": w}))
            .collect();
        json!({"n": self.n, "noise": noise})
    }

    /// `{r(Eᵢ) + r(Eⱼ) : all i, j}`.
    pub fn difference_set(&self) -> DifferenceSet {
        let mut set = BTreeSet::new();
        for (a, _) in &self.noise {
            for (b, _) in &self.noise {
                set.insert(a.check_vector() + b.check_vector());
            }
        }
        DifferenceSet(set)
    }

    /// `dim G_φ`, which equals the size of the difference set because Paulis
    /// with distinct check vectors are trace-orthogonal.
    pub fn graph_dimension(&self) -> usize {
        self.difference_set().len()
    }

    /// `Σ λᵢ Eᵢ ρ Eᵢ†` on dense matrices.
    pub fn apply_dense(&self, rho: &DenseMatrix) -> Result<DenseMatrix> {
        let dim = 1usize << self.n;
        if rho.nrows() != dim || rho.ncols() != dim {
            return Err(Error::input(format!(
                "density matrix is {}x{}, expected {dim}x{dim}",
                rho.nrows(),
                rho.ncols()
            )));
        }
        let limit = DEFAULT_DENSE_LIMIT.max(self.n);
        let mut out = DMatrix::<Complex64>::zeros(dim, dim);
        for (e, w) in &self.noise {
            let m = e.to_dense_within(limit)?;
            out += (&m * rho * m.adjoint()) * Complex64::new(*w, 0.0);
        }
        Ok(out)
    }
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    if let Some(key) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        let at = if path.is_empty() {
            key.clone()
        } else {
            format!("{path}.{key}")
        };
        return Err(Error::schema(at, "unknown field"));
    }
    Ok(())
}

/// The channel `x ↦ Σ_{h∈S} λ_h h x h` for a maximal stabilizer `S`.
///
/// Weights follow the order of [`StabilizerGroup::elements`]; uniform when
/// omitted.
pub fn maximal_stabilizer_channel(
    s: &StabilizerGroup,
    weights: Option<&[f64]>,
) -> Result<PauliChannel> {
    if s.k() != 0 {
        return Err(Error::input(format!(
            "stabilizer has {} generators, expected {}",
            s.generators().len(),
            s.n()
        )));
    }
    let elements = s.elements()?;
    let noise = match weights {
        None => {
            let w = 1.0 / elements.len() as f64;
            elements.into_iter().map(|h| (h, w)).collect()
        }
        Some(ws) => {
            if ws.len() != elements.len() {
                return Err(Error::input(format!(
                    "expected {} weights, found {}",
                    elements.len(),
                    ws.len()
                )));
            }
            elements.into_iter().zip(ws.iter().copied()).collect()
        }
    };
    PauliChannel::new(s.n(), noise)
}
