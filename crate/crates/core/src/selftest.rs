//! Acceptance checks packaged as functions, shared by the `selftest`
//! subcommand and the acceptance test target.
//!
//! Each check returns a [`CriterionOutcome`]; the first failing case (if any)
//! is attached as a JSON reproduction blob.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::channel::{maximal_stabilizer_channel, PauliChannel};
use crate::f2::{self, BitVec2n, F2Basis};
use crate::oracle::Oracle;
use crate::pauli::PauliOperator;
use crate::ramsey::{self, SearchMode, Verdict};
use crate::stabilizer::{self, StabilizerGroup};

#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Run the full n = 2 trichotomy sweep instead of a seeded sample.
    pub exhaustive: bool,
    /// Largest qubit count exercised by any check.
    pub max_n: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 0,
            exhaustive: true,
            max_n: 4,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
    pub reproduction: Option<Value>,
}

impl CriterionOutcome {
    fn finish(
        id: u8,
        name: &'static str,
        start: Instant,
        budget: Option<Duration>,
        failure: Option<Value>,
        detail: String,
    ) -> Self {
        let elapsed = start.elapsed();
        let in_budget = budget.is_none_or(|b| elapsed < b);
        let detail = if in_budget {
            detail
        } else {
            format!("{detail}; exceeded runtime budget {:?}", budget.unwrap())
        };
        CriterionOutcome {
            id,
            name,
            passed: failure.is_none() && in_budget,
            detail,
            elapsed,
            budget,
            reproduction: failure,
        }
    }

    /// Omits timing.
    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "budget_seconds": self.budget.map(|b| b.as_secs()),
            "reproduction": self.reproduction,
        })
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({}) in {:.2}s",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(b) = self.budget {
            write!(f, " (budget {}s)", b.as_secs())?;
        }
        Ok(())
    }
}

/// Runs every criterion in order.
pub fn run_all(cfg: &SelftestConfig) -> Vec<CriterionOutcome> {
    let (c5, sample) = trichotomy(cfg);
    vec![
        pauli_ground_truth(cfg),
        centralizer_dimension(cfg),
        oracle_equivalence(cfg),
        main_theorem(cfg),
        c5,
        correctability_equivalence(cfg),
        sign_invariance(cfg),
        completion_lemmas(cfg),
        private_codes(cfg, &sample),
    ]
}

fn rng_for(cfg: &SelftestConfig, criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ criterion)
}

fn random_pauli(rng: &mut impl Rng, n: usize) -> PauliOperator {
    let mask = (1u64 << n) - 1;
    let bits = BitVec2n::from_parts(n, rng.random::<u64>() & mask, rng.random::<u64>() & mask);
    PauliOperator::new(rng.random_range(0..4), bits)
}

/// Random channel with `1..=max_ops` noise operators (random phases and
/// weights).
fn random_channel(rng: &mut impl Rng, n: usize, max_ops: usize) -> PauliChannel {
    let m = rng.random_range(1..=max_ops);
    let ops: Vec<PauliOperator> = (0..m).map(|_| random_pauli(rng, n)).collect();
    let weights: Vec<f64> = (0..m).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut noise: Vec<(PauliOperator, f64)> = ops
        .into_iter()
        .zip(weights.iter().map(|w| w / total))
        .collect();
    // absorb rounding so the sum check cannot trip
    let drift: f64 = 1.0 - noise.iter().map(|(_, w)| w).sum::<f64>();
    noise[0].1 += drift;
    PauliChannel::new(n, noise).expect("random channel is valid")
}

/// Negates each generator independently with probability 1/2.
fn random_signs(rng: &mut impl Rng, basis: &F2Basis) -> StabilizerGroup {
    let gens: Vec<PauliOperator> = basis
        .vectors()
        .iter()
        .map(|&v| {
            let g = PauliOperator::from_check_vector(v);
            if rng.random::<bool>() {
                g.negate()
            } else {
                g
            }
        })
        .collect();
    StabilizerGroup::validate(basis.n(), &gens).expect("isotropic basis")
}

struct SubspaceCache(HashMap<(usize, usize), Vec<F2Basis>>);

impl SubspaceCache {
    fn new() -> Self {
        SubspaceCache(HashMap::new())
    }

    fn pick(&mut self, rng: &mut impl Rng, n: usize, d: usize) -> F2Basis {
        let list = self
            .0
            .entry((n, d))
            .or_insert_with(|| f2::enumerate_isotropic(n, d).expect("d <= n"));
        list[rng.random_range(0..list.len())].clone()
    }
}

fn hermitian_paulis(n: usize) -> Vec<PauliOperator> {
    BitVec2n::all(n)
        .map(PauliOperator::from_check_vector)
        .collect()
}

/// Uniform channels over every nonempty subset of the 16 two-qubit Paulis
/// (mod phase) with at most `max_size` elements.
pub fn two_qubit_channels(max_size: usize) -> Vec<PauliChannel> {
    let paulis = hermitian_paulis(2);
    (1u32..1 << 16)
        .filter(|m| m.count_ones() as usize <= max_size)
        .map(|m| subset_channel(&paulis, m))
        .collect()
}

fn subset_channel(paulis: &[PauliOperator], mask: u32) -> PauliChannel {
    let ops: Vec<PauliOperator> = (0..paulis.len())
        .filter(|i| (mask >> i) & 1 == 1)
        .map(|i| paulis[i])
        .collect();
    PauliChannel::uniform(paulis[0].n(), &ops).expect("nonempty subset")
}

/// The 16 candidate codes with `k ≥ 1` at two qubits: 15 single-generator
/// groups and the full space.
pub fn two_qubit_candidates() -> Vec<StabilizerGroup> {
    let mut out = ramsey::candidates(2, 1).expect("n = 2");
    out.push(StabilizerGroup::trivial(2));
    out
}

fn repro(phi: &PauliChannel, r: &StabilizerGroup, extra: Value) -> Value {
    json!({
        "channel": phi.to_json(),
        "stabilizer": r.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "details": extra,
    })
}

/// Criterion 1: exact agreement of the symbolic Pauli algebra with dense
/// matrices.
pub fn pauli_ground_truth(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut rng = rng_for(cfg, 1);
    let mut failure = None;
    let mut checked = 0;
    'outer: for n in 1..=cfg.max_n.min(3) {
        for pair in 0..500 {
            let g = random_pauli(&mut rng, n);
            let mut h = random_pauli(&mut rng, n);
            if pair % 4 == 0 {
                // exercise the r(g) = r(h) branch of the trace lemma
                h = PauliOperator::new(rng.random_range(0..4), g.check_vector());
            }
            if let Err(what) = check_pauli_pair(&g, &h) {
                failure = Some(json!({"g": g.to_string(), "h": h.to_string(), "failed": what}));
                break 'outer;
            }
            checked += 1;
        }
    }
    CriterionOutcome::finish(
        1,
        "Pauli algebra matches dense matrices",
        start,
        Some(Duration::from_secs(10)),
        failure,
        format!("{checked} random pairs"),
    )
}

fn check_pauli_pair(g: &PauliOperator, h: &PauliOperator) -> Result<(), &'static str> {
    let dg = g.to_dense().unwrap();
    let dh = h.to_dense().unwrap();
    let gh = &dg * &dh;
    let hg = &dh * &dg;
    if g.multiply(h).unwrap().to_dense().unwrap() != gh {
        return Err("multiply");
    }
    if g.adjoint().to_dense().unwrap() != dg.adjoint() {
        return Err("adjoint");
    }
    if g.tensor(h).unwrap().to_dense_within(6).unwrap() != dg.kronecker(&dh) {
        return Err("tensor");
    }
    if g.commutes(h).unwrap() != (gh == hg) {
        return Err("commutes");
    }
    if g.is_hermitian() != (dg == dg.adjoint()) {
        return Err("is_hermitian");
    }
    if g.is_scalar() != (dg.trace().norm() > 0.5) {
        return Err("is_scalar / non-zero trace");
    }
    if (g.check_vector() == h.check_vector()) != (gh.trace().norm() > 0.5) {
        return Err("trace similarity");
    }
    if g.to_string().parse::<PauliOperator>().ok() != Some(*g) {
        return Err("parse(format(g))");
    }
    Ok(())
}

/// Criterion 2: `dim L(Z(S)) = n + k` for every isotropic subspace, n ≤ 3,
/// cross-checked by counting commuting vectors directly.
pub fn centralizer_dimension(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut failure = None;
    let mut checked = 0;
    'outer: for n in 1..=cfg.max_n.min(3) {
        let all: Vec<BitVec2n> = BitVec2n::all(n).collect();
        for d in 0..=n {
            for basis in f2::enumerate_isotropic(n, d).expect("d <= n") {
                let s = StabilizerGroup::from_isotropic(&basis).expect("isotropic");
                let dim = s.centralizer_image().rank();
                let commuting = all.iter().filter(|v| s.centralizes(v)).count();
                if dim != n + s.k() || commuting != 1 << (n + s.k()) {
                    failure = Some(json!({
                        "stabilizer": s.to_string(),
                        "dim": dim,
                        "commuting_vectors": commuting,
                        "expected_dim": n + s.k(),
                    }));
                    break 'outer;
                }
                checked += 1;
            }
        }
    }
    CriterionOutcome::finish(
        2,
        "centralizer image has dimension n + k",
        start,
        Some(Duration::from_secs(30)),
        failure,
        format!("{checked} stabilizer groups"),
    )
}

/// Criterion 3: symplectic coset count equals the dense Gram rank.
pub fn oracle_equivalence(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let oracle = Oracle::default();
    let mut failure = None;
    let mut exhaustive_cases = 0;
    let mut random_cases = 0;

    let check = |phi: &PauliChannel, r: &StabilizerGroup| -> Option<Value> {
        let fast = ramsey::compressed_dimension(phi, r).expect("same n");
        let dense = oracle.compressed_dimension(phi, r).expect("within bound");
        (fast != dense.rank).then(|| {
            repro(phi, r, json!({"symplectic": fast, "oracle": dense.rank, "singular_values": dense.singular_values}))
        })
    };

    if cfg.max_n >= 2 {
        let cands = two_qubit_candidates();
        'a: for phi in two_qubit_channels(4) {
            for r in &cands {
                if let Some(f) = check(&phi, r) {
                    failure = Some(f);
                    break 'a;
                }
                exhaustive_cases += 1;
            }
        }
    }
    if failure.is_none() && cfg.max_n >= 3 {
        let mut rng = rng_for(cfg, 3);
        let mut cache = SubspaceCache::new();
        for _ in 0..200 {
            let phi = random_channel(&mut rng, 3, 6);
            let d = rng.random_range(0..=3);
            let basis = cache.pick(&mut rng, 3, d);
            let r = random_signs(&mut rng, &basis);
            if let Some(f) = check(&phi, &r) {
                failure = Some(f);
                break;
            }
            random_cases += 1;
        }
    }
    CriterionOutcome::finish(
        3,
        "coset count equals dense Gram rank",
        start,
        Some(Duration::from_secs(300)),
        failure,
        format!("{exhaustive_cases} exhaustive n=2 cases, {random_cases} random n=3 cases"),
    )
}

/// Criterion 4: maximal-stabilizer channels have no nontrivial stabilizer
/// cliques or anticliques.
pub fn main_theorem(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut rng = rng_for(cfg, 4);
    let mut failure = None;
    let mut channels = 0;
    let mut examined = 0;

    let mut run = |s: &StabilizerGroup, rng: &mut ChaCha8Rng| -> Option<Value> {
        let n = s.n();
        let weights = random_weights(rng, 1 << n);
        let phi = maximal_stabilizer_channel(s, Some(&weights)).expect("maximal");
        let ks: Vec<usize> = (1..=n).collect();
        let report = ramsey::search(&phi, SearchMode::Both, &ks).expect("n within bound");
        channels += 1;
        examined += report.examined();
        (report.witness_count() > 0).then(|| report.to_json())
    };

    let mut groups: Vec<StabilizerGroup> = Vec::new();
    if cfg.max_n >= 2 {
        for b in f2::enumerate_isotropic(2, 2).expect("n = 2") {
            groups.push(random_signs(&mut rng, &b));
        }
    }
    if cfg.max_n >= 3 {
        let lagrangians = f2::enumerate_isotropic(3, 3).expect("n = 3");
        let picks: Vec<usize> = if cfg.exhaustive {
            (0..lagrangians.len()).collect()
        } else {
            index::sample(&mut rng, lagrangians.len(), 10).into_vec()
        };
        for i in picks {
            groups.push(random_signs(&mut rng, &lagrangians[i]));
        }
    }
    if cfg.max_n >= 4 {
        let mut cache = SubspaceCache::new();
        for _ in 0..3 {
            let b = cache.pick(&mut rng, 4, 4);
            groups.push(random_signs(&mut rng, &b));
        }
    }
    for s in &groups {
        if let Some(f) = run(s, &mut rng) {
            failure = Some(json!({"stabilizer": s.to_string(), "report": f}));
            break;
        }
    }
    CriterionOutcome::finish(
        4,
        "maximal-stabilizer channels have no stabilizer witnesses",
        start,
        Some(Duration::from_secs(120)),
        failure,
        format!("{channels} channels, {examined} candidate codes searched"),
    )
}

fn random_weights(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..m).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let mut w: Vec<f64> = raw.iter().map(|x| x / total).collect();
    let drift = 1.0 - w.iter().sum::<f64>();
    w[0] += drift;
    w
}

/// Witnesses from criterion 5's oracle subsample, reused by criterion 9.
#[derive(Clone, Debug, Default)]
pub struct TrichotomySample {
    pub cliques: Vec<(PauliChannel, StabilizerGroup)>,
}

/// Criterion 5: every nonempty subset of the two-qubit Paulis classifies
/// as a verified anticlique, clique, or maximal-stabilizer channel; a 1%
/// seeded subsample is re-verified on dense matrices.
pub fn trichotomy(cfg: &SelftestConfig) -> (CriterionOutcome, TrichotomySample) {
    let start = Instant::now();
    let mut sample = TrichotomySample::default();
    if cfg.max_n < 2 {
        let out = CriterionOutcome::finish(
            5,
            "trichotomy at n = 2",
            start,
            None,
            None,
            "skipped (max_n < 2)".into(),
        );
        return (out, sample);
    }
    let mut rng = rng_for(cfg, 5);
    let paulis = hermitian_paulis(2);
    let masks: Vec<u32> = if cfg.exhaustive {
        (1..1 << 16).collect()
    } else {
        index::sample(&mut rng, (1 << 16) - 1, 2000)
            .into_iter()
            .map(|i| i as u32 + 1)
            .collect()
    };
    let audit_count = masks.len().div_ceil(100);
    let mut audit = vec![false; masks.len()];
    for i in index::sample(&mut rng, masks.len(), audit_count) {
        audit[i] = true;
    }

    let oracle = Oracle::default();
    let mut counts: HashMap<Verdict, usize> = HashMap::new();
    let mut failure = None;
    for (i, &mask) in masks.iter().enumerate() {
        let psi = subset_channel(&paulis, mask);
        let result = ramsey::classify(&psi).expect("n within bound");
        *counts.entry(result.verdict).or_default() += 1;
        let ok = ramsey::verify_classification(&psi, &result).expect("same n");
        if result.verdict == Verdict::Inconsistent || !ok {
            failure = Some(json!({"channel": psi.to_json(), "result": result.to_json()}));
            break;
        }
        if audit[i] {
            let r = result
                .witness
                .as_ref()
                .expect("verified results carry witnesses");
            if let Some(what) = oracle.audit_classification(&psi, &result).expect("n <= 2") {
                failure = Some(json!({
                    "channel": psi.to_json(),
                    "result": result.to_json(),
                    "oracle": what,
                }));
                break;
            }
            if result.verdict == Verdict::Clique {
                sample.cliques.push((psi, r.clone()));
            }
        }
    }
    let get = |v| counts.get(&v).copied().unwrap_or(0);
    let detail = format!(
        "{} channels: {} anticlique, {} clique, {} maximal-stabilizer, {} inconsistent; {} oracle-audited",
        masks.len(),
        get(Verdict::Anticlique),
        get(Verdict::Clique),
        get(Verdict::MaximalStabilizerChannel),
        get(Verdict::Inconsistent),
        audit_count
    );
    let out = CriterionOutcome::finish(
        5,
        "trichotomy at n = 2",
        start,
        Some(Duration::from_secs(600)),
        failure,
        detail,
    );
    (out, sample)
}

/// Criterion 6: Gottesman's condition, the anticlique test and the dense
/// Knill–Laflamme check agree on the exhaustive two-qubit set.
pub fn correctability_equivalence(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let oracle = Oracle::default();
    let mut failure = None;
    let mut checked = 0;
    let mut correctable = 0;
    if cfg.max_n >= 2 {
        let cands = two_qubit_candidates();
        'outer: for phi in two_qubit_channels(4) {
            for r in &cands {
                let g = ramsey::gottesman_correctable(&phi, r).expect("same n");
                let a = ramsey::is_anticlique(&phi, r).expect("same n");
                let kl = oracle.kl_check(&phi, r).expect("within bound");
                if g != a || a != kl {
                    failure = Some(repro(
                        &phi,
                        r,
                        json!({"gottesman": g, "anticlique": a, "knill_laflamme": kl}),
                    ));
                    break 'outer;
                }
                checked += 1;
                correctable += g as usize;
            }
        }
    }
    CriterionOutcome::finish(
        6,
        "Gottesman, anticlique and Knill-Laflamme criteria agree",
        start,
        None,
        failure,
        format!("{checked} cases, {correctable} correctable"),
    )
}

/// Criterion 7: flipping generator signs moves the projector but not the
/// dense compressed dimension.
pub fn sign_invariance(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut rng = rng_for(cfg, 7);
    let mut cache = SubspaceCache::new();
    let oracle = Oracle::default();
    let mut failure = None;
    let mut checked = 0;
    for _ in 0..50 {
        let n = rng.random_range(1..=cfg.max_n.clamp(1, 2));
        let phi = random_channel(&mut rng, n, 5);
        let d = rng.random_range(1..=n);
        let basis = cache.pick(&mut rng, n, d);
        let r = StabilizerGroup::from_isotropic(&basis).expect("isotropic");
        // a nonempty set of generators to negate
        let flips = rng.random_range(1..1u32 << d);
        let flipped: Vec<PauliOperator> = r
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if (flips >> i) & 1 == 1 {
                    g.negate()
                } else {
                    *g
                }
            })
            .collect();
        let r2 = StabilizerGroup::validate(n, &flipped).expect("signs keep validity");
        let p1 = r.projector().expect("n <= 2");
        let p2 = r2.projector().expect("n <= 2");
        let a = oracle.compressed_dimension(&phi, &r).expect("n <= 2").rank;
        let b = oracle.compressed_dimension(&phi, &r2).expect("n <= 2").rank;
        if p1 == p2 || a != b {
            failure = Some(json!({
                "channel": phi.to_json(),
                "stabilizer": r.to_string(),
                "flipped": r2.to_string(),
                "projector_changed": p1 != p2,
                "ranks": [a, b],
            }));
            break;
        }
        checked += 1;
    }
    CriterionOutcome::finish(
        7,
        "generator signs do not affect the compressed dimension",
        start,
        None,
        failure,
        format!("{checked} seeded cases"),
    )
}

/// Criterion 8: the maximal-extension and anticommuting-partner routines
/// meet their postconditions.
pub fn completion_lemmas(cfg: &SelftestConfig) -> CriterionOutcome {
    let start = Instant::now();
    let mut rng = rng_for(cfg, 8);
    let mut cache = SubspaceCache::new();
    let mut failure = None;
    let mut checked = 0;
    for _ in 0..100 {
        let n = rng.random_range(1..=cfg.max_n.clamp(1, 4));
        let d = rng.random_range(0..=n);
        let basis = cache.pick(&mut rng, n, d);
        let s = random_signs(&mut rng, &basis);
        let ext = stabilizer::extend_to_maximal(&s);
        let result = stabilizer::verify_maximal_extension(&s, &ext).and_then(|_| {
            let g = stabilizer::anticommuting_partners(&ext).map_err(|e| e.to_string())?;
            stabilizer::verify_symplectic_pairs(&ext, &g)
        });
        if let Err(what) = result {
            failure = Some(json!({"stabilizer": s.to_string(), "failed": what}));
            break;
        }
        checked += 1;
    }
    CriterionOutcome::finish(
        8,
        "completion lemmas meet their postconditions",
        start,
        Some(Duration::from_secs(30)),
        failure,
        format!("{checked} seeded inputs"),
    )
}

/// Criterion 9: sampled private-code evidence for every clique witness in
/// criterion 5's oracle subsample.
pub fn private_codes(cfg: &SelftestConfig, sample: &TrichotomySample) -> CriterionOutcome {
    let start = Instant::now();
    let oracle = Oracle::default();
    let mut failure = None;
    for (i, (psi, r)) in sample.cliques.iter().enumerate() {
        let seed = cfg.seed.wrapping_add(i as u64);
        match oracle.private_witness_check(psi, r, 100, seed) {
            Ok(true) => {}
            other => {
                failure = Some(repro(
                    psi,
                    r,
                    json!({"result": format!("{other:?}"), "seed": seed}),
                ));
                break;
            }
        }
    }
    CriterionOutcome::finish(
        9,
        "clique witnesses behave as private codes",
        start,
        None,
        failure,
        format!("{} clique witnesses x 100 samples", sample.cliques.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_qubit_sets_have_the_expected_sizes() {
        assert_eq!(two_qubit_channels(4).len(), 16 + 120 + 560 + 1820);
        assert_eq!(two_qubit_candidates().len(), 16);
    }

    #[test]
    fn quick_run_passes() {
        let cfg = SelftestConfig {
            seed: 3,
            exhaustive: false,
            max_n: 2,
        };
        for c in [
            pauli_ground_truth(&cfg),
            completion_lemmas(&cfg),
            sign_invariance(&cfg),
        ] {
            assert!(c.passed, "{c}");
        }
    }
}
