//! Clique and anticlique decisions for stabilizer codes, the exhaustive
//! stabilizer search, and the trichotomy classifier.
//!
//! Everything here works on check vectors only. For a channel `φ` and a
//! stabilizer group `R`, `dim(P G_φ P)` is the number of cosets of `L(R)`
//! met by the difference set inside `L(Z(R))`; a code of dimension `2^k` is
//! an anticlique when that count is 1 and a clique when it is `4^k`.

use std::fmt;

use serde_json::{json, Value};

use crate::channel::{maximal_stabilizer_channel, PauliChannel};
use crate::error::{Error, Result};
use crate::f2::{self, BitVec2n, F2Basis};
use crate::pauli::PauliOperator;
use crate::stabilizer::{anticommuting_partners, StabilizerGroup};

/// Largest qubit count accepted by [`search`] and [`classify`].
pub const SEARCH_LIMIT: usize = 4;

fn same_n(phi: &PauliChannel, r: &StabilizerGroup) -> Result<()> {
    if phi.n() != r.n() {
        return Err(Error::SizeMismatch {
            expected: phi.n(),
            found: r.n(),
        });
    }
    Ok(())
}

/// `dim(P G_φ P)` for the code of `r`.
pub fn compressed_dimension(phi: &PauliChannel, r: &StabilizerGroup) -> Result<usize> {
    same_n(phi, r)?;
    Ok(count_cosets(&phi.difference_set().to_vec(), r))
}

fn count_cosets(diffs: &[BitVec2n], r: &StabilizerGroup) -> usize {
    let hits: Vec<BitVec2n> = diffs.iter().copied().filter(|v| r.centralizes(v)).collect();
    f2::coset_count(&hits, &r.coset_space()).expect("hits lie in L(Z(R))")
}

/// `4^k`, the dimension of `P M P` for a code of dimension `2^k`.
pub fn full_dimension(k: usize) -> usize {
    1usize << (2 * k)
}

pub fn is_anticlique(phi: &PauliChannel, r: &StabilizerGroup) -> Result<bool> {
    Ok(compressed_dimension(phi, r)? == 1)
}

pub fn is_clique(phi: &PauliChannel, r: &StabilizerGroup) -> Result<bool> {
    Ok(compressed_dimension(phi, r)? == full_dimension(r.k()))
}

/// Gottesman's criterion: no `Eᵢ†Eⱼ` lies in `Z(S) \ S` up to phase.
pub fn gottesman_correctable(phi: &PauliChannel, s: &StabilizerGroup) -> Result<bool> {
    same_n(phi, s)?;
    let image = s.image();
    Ok(phi
        .difference_set()
        .iter()
        .all(|v| !s.centralizes(v) || image.contains(v).expect("sizes agree")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Clique,
    Anticlique,
    Both,
}

impl SearchMode {
    fn wants_clique(self) -> bool {
        matches!(self, SearchMode::Clique | SearchMode::Both)
    }

    fn wants_anticlique(self) -> bool {
        matches!(self, SearchMode::Anticlique | SearchMode::Both)
    }
}

impl std::str::FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clique" => Ok(SearchMode::Clique),
            "anticlique" => Ok(SearchMode::Anticlique),
            "both" => Ok(SearchMode::Both),
            other => Err(Error::input(format!(
                "unknown mode {other:?}, expected clique|anticlique|both"
            ))),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Clique => "clique",
            SearchMode::Anticlique => "anticlique",
            SearchMode::Both => "both",
        })
    }
}

/// Search results for one code size `2^k`.
#[derive(Clone, Debug)]
pub struct KSearch {
    pub k: usize,
    /// Candidate stabilizer groups evaluated; one per isotropic subspace of
    /// dimension `n - k`.
    pub examined: usize,
    pub anticliques: Vec<StabilizerGroup>,
    pub cliques: Vec<StabilizerGroup>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    pub mode: SearchMode,
    pub graph_dimension: usize,
    pub per_k: Vec<KSearch>,
}

impl SearchReport {
    pub fn examined(&self) -> usize {
        self.per_k.iter().map(|s| s.examined).sum()
    }

    pub fn witness_count(&self) -> usize {
        self.per_k
            .iter()
            .map(|s| s.anticliques.len() + s.cliques.len())
            .sum()
    }

    /// First witness in report order (anticliques before cliques per `k`).
    pub fn first_witness(&self) -> Option<(Verdict, &StabilizerGroup)> {
        self.per_k.iter().find_map(|s| {
            s.anticliques
                .first()
                .map(|r| (Verdict::Anticlique, r))
                .or_else(|| s.cliques.first().map(|r| (Verdict::Clique, r)))
        })
    }

    pub fn to_json(&self) -> Value {
        let gens = |r: &StabilizerGroup| -> Vec<String> {
            r.generators().iter().map(|g| g.to_string()).collect()
        };
        let (verdict, witness, dim) = match self.first_witness() {
            Some((v, r)) => {
                let d = if v == Verdict::Anticlique {
                    1
                } else {
                    full_dimension(r.k())
                };
                (v.to_string(), gens(r), Value::from(d))
            }
            None => ("NoWitness".to_string(), Vec::new(), Value::Null),
        };
        let per_k: Vec<Value> = self
            .per_k
            .iter()
            .map(|s| {
                json!({
                    "k": s.k,
                    "examined": s.examined,
                    "anticliques": s.anticliques.iter().map(gens).collect::<Vec<_>>(),
                    "cliques": s.cliques.iter().map(gens).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "verdict": verdict,
            "witness_generators": witness,
            "dim_PGP": dim,
            "examined": self.examined(),
            "n": self.n,
            "mode": self.mode.to_string(),
            "graph_dimension": self.graph_dimension,
            "witness_count": self.witness_count(),
            "per_k": per_k,
        })
    }
}

/// All `+`-signed stabilizer groups with `n - k` generators, in canonical
/// order of their check-vector images.
pub fn candidates(n: usize, k: usize) -> Result<Vec<StabilizerGroup>> {
    if k > n {
        return Err(Error::input(format!("k = {k} exceeds n = {n}")));
    }
    f2::enumerate_isotropic(n, n - k)?
        .iter()
        .map(StabilizerGroup::from_isotropic)
        .collect()
}

fn check_search_size(n: usize) -> Result<()> {
    if n > SEARCH_LIMIT {
        return Err(Error::Capacity {
            what: "search qubit count",
            requested: n,
            limit: SEARCH_LIMIT,
        });
    }
    Ok(())
}

/// Exhaustive search over every stabilizer code of dimension `2^k` for each
/// `k` in `ks`. Signs are fixed to `+`; the verdict depends only on the
/// check-vector image.
pub fn search(phi: &PauliChannel, mode: SearchMode, ks: &[usize]) -> Result<SearchReport> {
    let n = phi.n();
    check_search_size(n)?;
    if ks.is_empty() {
        return Err(Error::input("k range is empty"));
    }
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || k > n) {
        return Err(Error::input(format!("k = {k} outside 1..={n}")));
    }
    let diffs = phi.difference_set().to_vec();
    let mut per_k = Vec::with_capacity(ks.len());
    for &k in ks {
        let cands = candidates(n, k)?;
        let full = full_dimension(k);
        let mut entry = KSearch {
            k,
            examined: cands.len(),
            anticliques: Vec::new(),
            cliques: Vec::new(),
        };
        for r in cands {
            let d = count_cosets(&diffs, &r);
            if d == 1 && mode.wants_anticlique() {
                entry.anticliques.push(r.clone());
            }
            if d == full && mode.wants_clique() {
                entry.cliques.push(r);
            }
        }
        per_k.push(entry);
    }
    Ok(SearchReport {
        n,
        mode,
        graph_dimension: diffs.len(),
        per_k,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Anticlique,
    Clique,
    MaximalStabilizerChannel,
    Inconsistent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Anticlique => "Anticlique",
            Verdict::Clique => "Clique",
            Verdict::MaximalStabilizerChannel => "MaximalStabilizerChannel",
            Verdict::Inconsistent => "Inconsistent",
        })
    }
}

/// How a classification witness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// The difference set is itself a maximal isotropic subspace.
    Direct,
    /// The constructive candidate from the commuting / noncommuting argument.
    Constructive,
    /// Exhaustive search after the constructive candidate was unavailable or
    /// failed verification.
    Search,
    None,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Direct => "direct",
            Route::Constructive => "constructive",
            Route::Search => "search",
            Route::None => "none",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    /// Verified witness; `None` only for [`Verdict::Inconsistent`].
    pub witness: Option<StabilizerGroup>,
    pub dim_pgp: Option<usize>,
    /// Candidate groups whose compressed dimension was evaluated.
    pub examined: usize,
    pub route: Route,
    /// Constructive candidates that failed verification, as
    /// `(kind, generators, dim_PGP)`.
    pub rejected: Vec<(Verdict, StabilizerGroup, usize)>,
    pub diagnostic: Option<String>,
}

impl ClassificationResult {
    pub fn to_json(&self) -> Value {
        let gens: Vec<String> = self
            .witness
            .iter()
            .flat_map(|r| r.generators().iter().map(|g| g.to_string()))
            .collect();
        let mut v = json!({
            "verdict": self.verdict.to_string(),
            "witness_generators": gens,
            "dim_PGP": self.dim_pgp,
            "examined": self.examined,
            "route": self.route.to_string(),
        });
        if let Some(r) = &self.witness {
            v["k"] = json!(r.k());
        }
        if !self.rejected.is_empty() {
            v["rejected_candidates"] = self
                .rejected
                .iter()
                .map(|(kind, r, d)| {
                    json!({
                        "kind": kind.to_string(),
                        "generators": r.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "dim_PGP": d,
                    })
                })
                .collect();
        }
        if let Some(d) = &self.diagnostic {
            v["diagnostic"] = json!(d);
        }
        v
    }
}

/// If `diffs` is exactly an `n`-dimensional isotropic subspace, the
/// `+`-signed maximal stabilizer with that image.
fn maximal_image(n: usize, diffs: &[BitVec2n]) -> Option<StabilizerGroup> {
    if diffs.len() != 1 << n {
        return None;
    }
    let basis = F2Basis::reduce(n, diffs).ok()?;
    if basis.rank() != n || !basis.is_isotropic() {
        return None;
    }
    StabilizerGroup::from_isotropic(&basis).ok()
}

/// Anticlique candidate for pairwise commuting noise.
///
/// Completes the span of the noise check vectors to a maximal isotropic
/// `L(S')`, picks the smallest nonzero `v ∈ L(S')` outside the difference
/// set, re-bases `L(S')` with `v` last, and returns the group generated by
/// the first `n - 1` anticommuting partners. Only `0` and `v` of `L(S')`
/// survive in `L(Z(R))`.
fn commuting_anticlique_candidate(
    n: usize,
    checks: &[BitVec2n],
    diffs: &[BitVec2n],
) -> Result<Option<StabilizerGroup>> {
    let span = F2Basis::reduce(n, checks)?;
    let s = StabilizerGroup::from_isotropic(&span)?;
    let maximal: Vec<BitVec2n> = s
        .extend_to_maximal()
        .iter()
        .map(|g| g.check_vector())
        .collect();
    let lagrangian = F2Basis::reduce(n, &maximal)?;
    let Some(v) = lagrangian
        .span_elements()
        .into_iter()
        .find(|v| !v.is_zero() && diffs.binary_search(v).is_err())
    else {
        return Ok(None);
    };
    let rebased = F2Basis::reduce(n, &[v])?.extend(lagrangian.vectors())?;
    let mut h: Vec<PauliOperator> = rebased.vectors()[1..]
        .iter()
        .map(|&w| PauliOperator::from_check_vector(w))
        .collect();
    h.push(PauliOperator::from_check_vector(v));
    let partners = anticommuting_partners(&h)?;
    Ok(Some(StabilizerGroup::validate(n, &partners[..n - 1])?))
}

/// Clique candidate for noise containing an anticommuting pair `h = Eᵢ`,
/// `g = Eⱼ`: complete `{h}` to a maximal commuting set, replace each
/// completion element anticommuting with `g` by its product with `h`, and
/// drop `h`.
fn noncommuting_clique_candidate(n: usize, h: BitVec2n, g: BitVec2n) -> Result<StabilizerGroup> {
    let hop = PauliOperator::from_check_vector(h);
    let mut ext = StabilizerGroup::validate(n, &[hop])?.extend_to_maximal();
    for op in ext.iter_mut().skip(1) {
        if op.check_vector().twisted(&g) {
            *op = op.multiply(&hop)?;
        }
    }
    StabilizerGroup::validate(n, &ext[1..])
}

fn first_pair_anticommuting(checks: &[BitVec2n]) -> Option<(BitVec2n, BitVec2n)> {
    checks.iter().enumerate().find_map(|(i, a)| {
        checks[i + 1..]
            .iter()
            .find(|b| a.twisted(b))
            .map(|b| (*a, *b))
    })
}

/// First witness of the requested kind over `k = 1..=n` in canonical order.
fn first_search_witness(
    n: usize,
    diffs: &[BitVec2n],
    kind: Verdict,
    examined: &mut usize,
) -> Result<Option<(StabilizerGroup, usize)>> {
    for k in 1..=n {
        let target = if kind == Verdict::Anticlique {
            1
        } else {
            full_dimension(k)
        };
        for r in candidates(n, k)? {
            *examined += 1;
            if count_cosets(diffs, &r) == target {
                return Ok(Some((r, target)));
            }
        }
    }
    Ok(None)
}

/// Decides which of the three outcomes holds for `psi`: a nontrivial
/// (`k ≥ 1`) stabilizer anticlique, a nontrivial stabilizer clique, or a
/// quantum graph equal to that of a maximal-stabilizer channel.
///
/// Constructive candidates are always verified; a failed candidate falls
/// back to exhaustive search. `Inconsistent` means all three outcomes were
/// ruled out.
pub fn classify(psi: &PauliChannel) -> Result<ClassificationResult> {
    let n = psi.n();
    check_search_size(n)?;
    let diffs = psi.difference_set().to_vec();
    let checks: Vec<BitVec2n> = psi.operators().iter().map(|e| e.check_vector()).collect();
    let mut examined = 0;
    let mut rejected = Vec::new();

    let done = |verdict, r: StabilizerGroup, dim, route, examined, rejected| ClassificationResult {
        verdict,
        witness: Some(r),
        dim_pgp: Some(dim),
        examined,
        route,
        rejected,
        diagnostic: None,
    };

    if let Some(s) = maximal_image(n, &diffs) {
        let phi = maximal_stabilizer_channel(&s, None)?;
        if phi.difference_set().to_vec() == diffs {
            let d = count_cosets(&diffs, &s);
            return Ok(done(
                Verdict::MaximalStabilizerChannel,
                s,
                d,
                Route::Direct,
                examined,
                rejected,
            ));
        }
    }

    let anticommuting = first_pair_anticommuting(&checks);
    if anticommuting.is_none() {
        if let Some(r) = commuting_anticlique_candidate(n, &checks, &diffs)? {
            examined += 1;
            let d = count_cosets(&diffs, &r);
            if d == 1 && r.k() >= 1 {
                return Ok(done(
                    Verdict::Anticlique,
                    r,
                    d,
                    Route::Constructive,
                    examined,
                    rejected,
                ));
            }
            rejected.push((Verdict::Anticlique, r, d));
        }
    }
    if let Some((r, d)) = first_search_witness(n, &diffs, Verdict::Anticlique, &mut examined)? {
        return Ok(done(
            Verdict::Anticlique,
            r,
            d,
            Route::Search,
            examined,
            rejected,
        ));
    }

    if let Some((h, g)) = anticommuting {
        let r = noncommuting_clique_candidate(n, h, g)?;
        examined += 1;
        let d = count_cosets(&diffs, &r);
        if d == full_dimension(r.k()) && r.k() >= 1 {
            return Ok(done(
                Verdict::Clique,
                r,
                d,
                Route::Constructive,
                examined,
                rejected,
            ));
        }
        rejected.push((Verdict::Clique, r, d));
    }
    if let Some((r, d)) = first_search_witness(n, &diffs, Verdict::Clique, &mut examined)? {
        return Ok(done(
            Verdict::Clique,
            r,
            d,
            Route::Search,
            examined,
            rejected,
        ));
    }

    let diff_text: Vec<String> = diffs.iter().map(|v| v.to_string()).collect();
    Ok(ClassificationResult {
        verdict: Verdict::Inconsistent,
        witness: None,
        dim_pgp: None,
        examined,
        route: Route::None,
        rejected,
        diagnostic: Some(format!(
            "no stabilizer anticlique or clique with k >= 1 and the difference set {{{}}} is not a maximal isotropic subspace; channel: {}",
            diff_text.join(", "),
            psi.to_json()
        )),
    })
}

/// Re-checks a classification against its channel at the check-vector level.
pub fn verify_classification(psi: &PauliChannel, result: &ClassificationResult) -> Result<bool> {
    let Some(r) = &result.witness else {
        return Ok(false);
    };
    Ok(match result.verdict {
        Verdict::Anticlique => r.k() >= 1 && is_anticlique(psi, r)?,
        Verdict::Clique => r.k() >= 1 && is_clique(psi, r)?,
        Verdict::MaximalStabilizerChannel => {
            r.k() == 0
                && maximal_stabilizer_channel(r, None)?.difference_set() == psi.difference_set()
        }
        Verdict::Inconsistent => false,
    })
}
