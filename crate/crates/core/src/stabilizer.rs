//! Stabilizer groups, their centralizer images, code projectors and the two
//! completion lemmas (maximal extension and anticommuting partners).

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::f2::{self, BitVec2n, CosetSpace, F2Basis};
use crate::pauli::{self, DenseMatrix, PauliOperator, DEFAULT_DENSE_LIMIT};

/// Largest generator count for which [`StabilizerGroup::elements`] will
/// materialize the group.
pub const ELEMENT_LIMIT: usize = 20;

/// A stabilizer group given by independent, commuting, Hermitian generators.
///
/// Generators are stored in canonical form: reduced over F₂ (multiplying the
/// operators themselves, so signs are tracked) and sorted by check vector.
/// Two groups are equal iff their canonical generators are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
}

impl StabilizerGroup {
    /// Validates generators and returns the group they generate.
    pub fn validate(n: usize, generators: &[PauliOperator]) -> Result<Self> {
        for g in generators {
            if g.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
        }
        check_commuting_hermitian(generators)?;
        let checks: Vec<BitVec2n> = generators.iter().map(|g| g.check_vector()).collect();
        if F2Basis::reduce(n, &checks)?.rank() != generators.len() {
            return Err(Error::Dependent);
        }
        Ok(StabilizerGroup {
            n,
            generators: canonical_generators(generators),
        })
    }

    /// Parses a comma-separated generator list such as `"ZZI,IZZ"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Self::validate(n, &pauli::parse_list(s)?)
    }

    /// The `+`-signed group whose check-vector image is `span(basis)`.
    /// `basis` must be isotropic.
    pub fn from_isotropic(basis: &F2Basis) -> Result<Self> {
        let gens: Vec<PauliOperator> = basis
            .vectors()
            .iter()
            .map(|&v| PauliOperator::from_check_vector(v))
            .collect();
        Self::validate(basis.n(), &gens)
    }

    /// The group with no generators; its code is the full space.
    pub fn trivial(n: usize) -> Self {
        StabilizerGroup {
            n,
            generators: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of logical qubits: the code has dimension `2^k`.
    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn check_vectors(&self) -> Vec<BitVec2n> {
        self.generators.iter().map(|g| g.check_vector()).collect()
    }

    /// `L(S)`, canonical.
    pub fn image(&self) -> F2Basis {
        F2Basis::reduce(self.n, &self.check_vectors()).expect("sizes agree")
    }

    /// Whether `g` lies in `Z(S)`, i.e. commutes with every generator.
    pub fn centralizes(&self, v: &BitVec2n) -> bool {
        self.generators.iter().all(|g| !g.check_vector().twisted(v))
    }

    /// All `2^{n-k}` elements with exact phases, in subset order of the
    /// generators (the empty product first).
    pub fn elements(&self) -> Result<Vec<PauliOperator>> {
        let m = self.generators.len();
        if m > ELEMENT_LIMIT {
            return Err(Error::Capacity {
                what: "stabilizer generator count",
                requested: m,
                limit: ELEMENT_LIMIT,
            });
        }
        let mut out = vec![PauliOperator::identity(self.n)];
        for g in &self.generators {
            let with: Vec<PauliOperator> = out.iter().map(|e| e.mul_unchecked(g)).collect();
            out.extend(with);
        }
        Ok(out)
    }

    /// `L(Z(S))`: the twisted kernel of the generators, of dimension `n + k`.
    pub fn centralizer_image(&self) -> F2Basis {
        f2::twisted_kernel(self.n, &self.check_vectors()).expect("sizes agree")
    }

    /// The quotient `L(Z(S)) / L(S)`.
    pub fn coset_space(&self) -> CosetSpace {
        CosetSpace::new(&self.image(), &self.centralizer_image())
            .expect("L(S) is contained in L(Z(S))")
    }

    /// Code projector in product form `2^{-(n-k)} ∏ (I + gᵢ)`.
    pub fn projector(&self) -> Result<DenseMatrix> {
        self.projector_within(DEFAULT_DENSE_LIMIT)
    }

    pub fn projector_within(&self, limit: usize) -> Result<DenseMatrix> {
        if self.n > limit {
            return Err(Error::Capacity {
                what: "dense qubit count",
                requested: self.n,
                limit,
            });
        }
        let dim = 1usize << self.n;
        let id = DMatrix::<Complex64>::identity(dim, dim);
        let mut p = id.clone();
        for g in &self.generators {
            p *= &id + g.to_dense_within(limit)?;
        }
        let scale = 1.0 / (1u64 << self.generators.len()) as f64;
        Ok(p * Complex64::new(scale, 0.0))
    }

    /// Code projector in summation form `2^{-(n-k)} Σ_{g∈S} g`.
    pub fn projector_by_sum(&self) -> Result<DenseMatrix> {
        let dim = 1usize << self.n;
        let mut p = DMatrix::<Complex64>::zeros(dim, dim);
        for g in self.elements()? {
            p += g.to_dense_within(self.n.max(DEFAULT_DENSE_LIMIT))?;
        }
        let scale = 1.0 / (1u64 << self.generators.len()) as f64;
        Ok(p * Complex64::new(scale, 0.0))
    }

    /// Completes the generators to `n` independent commuting Hermitian
    /// operators. Each new operator is the signless Hermitian representative
    /// of the smallest vector in the current centralizer image outside the
    /// current span.
    pub fn extend_to_maximal(&self) -> Vec<PauliOperator> {
        let mut ops = self.generators.clone();
        let mut span = self.image();
        while ops.len() < self.n {
            let checks: Vec<BitVec2n> = ops.iter().map(|g| g.check_vector()).collect();
            let kernel = f2::twisted_kernel(self.n, &checks).expect("sizes agree");
            let v = f2::smallest_outside(&kernel, &span)
                .expect("centralizer image exceeds the span below dimension n");
            ops.push(PauliOperator::from_check_vector(v));
            span = F2Basis::reduce(self.n, &[span.vectors(), &[v]].concat()).expect("sizes agree");
        }
        ops
    }
}

impl fmt::Display for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl fmt::Debug for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_commuting_hermitian(ops: &[PauliOperator]) -> Result<()> {
    if let Some(i) = ops.iter().position(|g| !g.is_hermitian()) {
        return Err(Error::NotHermitian(i + 1));
    }
    for (i, g) in ops.iter().enumerate() {
        for (j, h) in ops.iter().enumerate().skip(i + 1) {
            if !g.commutes(h)? {
                return Err(Error::Anticommuting(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// Fully reduced echelon form over operators, highest-bit pivots.
fn canonical_generators(ops: &[PauliOperator]) -> Vec<PauliOperator> {
    let mut rows: Vec<PauliOperator> = Vec::with_capacity(ops.len());
    for &op in ops {
        let mut g = op;
        for r in &rows {
            if g.check_vector().word() & top_bit(r) != 0 {
                g = g.mul_unchecked(r);
            }
        }
        if g.check_vector().is_zero() {
            continue;
        }
        let p = top_bit(&g);
        for r in rows.iter_mut() {
            if r.check_vector().word() & p != 0 {
                *r = r.mul_unchecked(&g);
            }
        }
        rows.push(g);
    }
    rows.sort_by_key(|g| g.check_vector().word());
    rows
}

fn top_bit(g: &PauliOperator) -> u64 {
    let w = g.check_vector().word();
    1u64 << (63 - w.leading_zeros())
}

/// Completes `generators` of `S` via [`StabilizerGroup::extend_to_maximal`].
pub fn extend_to_maximal(s: &StabilizerGroup) -> Vec<PauliOperator> {
    s.extend_to_maximal()
}

/// Given `n` independent commuting Hermitian `h₁…hₙ`, returns Hermitian
/// `g₁…gₙ`, pairwise commuting, with `gᵢ hⱼ = (-1)^{δᵢⱼ} hⱼ gᵢ`.
///
/// Each `gₗ` starts as the smallest vector of `L(Z(⟨hⱼ : j ≠ l⟩))` outside
/// `span(h)`. A sweep in increasing index order then replaces `gₖ` by `hᵢ gₖ`
/// whenever `gᵢ` and `gₖ` (i < k) anticommute.
pub fn anticommuting_partners(h: &[PauliOperator]) -> Result<Vec<PauliOperator>> {
    let n = h
        .first()
        .map(|g| g.n())
        .ok_or_else(|| Error::input("empty maximal set"))?;
    if h.len() != n {
        return Err(Error::input(format!(
            "expected {n} operators for a maximal set, found {}",
            h.len()
        )));
    }
    // validates Hermitian, commuting, independent; order is kept below
    StabilizerGroup::validate(n, h)?;
    let checks: Vec<BitVec2n> = h.iter().map(|g| g.check_vector()).collect();
    let span = F2Basis::reduce(n, &checks)?;

    let mut g: Vec<PauliOperator> = Vec::with_capacity(n);
    for l in 0..n {
        let others: Vec<BitVec2n> = checks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != l)
            .map(|(_, v)| *v)
            .collect();
        let kernel = f2::twisted_kernel(n, &others)?;
        let v = f2::smallest_outside(&kernel, &span)
            .ok_or_else(|| Error::input(format!("no partner exists for operator {}", l + 1)))?;
        g.push(PauliOperator::from_check_vector(v));
    }
    for i in 0..n {
        for k in i + 1..n {
            if !g[i].commutes(&g[k])? {
                g[k] = h[i].mul_unchecked(&g[k]);
            }
        }
    }
    verify_symplectic_pairs(h, &g).map_err(Error::Input)?;
    Ok(g)
}

/// Postconditions of [`anticommuting_partners`]: `g` Hermitian and pairwise
/// commuting, cross pattern `δᵢⱼ`, and `h ∪ g` of full rank `2n`.
pub fn verify_symplectic_pairs(
    h: &[PauliOperator],
    g: &[PauliOperator],
) -> std::result::Result<(), String> {
    let n = h.len();
    if g.len() != n {
        return Err(format!("expected {n} partners, found {}", g.len()));
    }
    if let Some(i) = g.iter().position(|x| !x.is_hermitian()) {
        return Err(format!("partner {} is not Hermitian", i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            let anti = g[i].check_vector().twisted(&h[j].check_vector());
            if anti != (i == j) {
                return Err(format!(
                    "partner {} {} with operator {}",
                    i + 1,
                    if anti { "anticommutes" } else { "commutes" },
                    j + 1
                ));
            }
            if j > i && g[i].check_vector().twisted(&g[j].check_vector()) {
                return Err(format!("partners {} and {} anticommute", i + 1, j + 1));
            }
        }
    }
    let all: Vec<BitVec2n> = h.iter().chain(g).map(|x| x.check_vector()).collect();
    let rank = F2Basis::reduce(h.first().map_or(1, |x| x.n()), &all)
        .map_err(|e| e.to_string())?
        .rank();
    if rank != 2 * n {
        return Err(format!("combined rank {rank} is not {}", 2 * n));
    }
    Ok(())
}

/// Postconditions of [`extend_to_maximal`]: keeps the original generators,
/// and yields `n` independent commuting Hermitian operators.
pub fn verify_maximal_extension(
    s: &StabilizerGroup,
    ext: &[PauliOperator],
) -> std::result::Result<(), String> {
    if ext.len() != s.n() {
        return Err(format!("expected {} operators, found {}", s.n(), ext.len()));
    }
    if ext[..s.generators().len()] != *s.generators() {
        return Err("extension does not start with the original generators".into());
    }
    StabilizerGroup::validate(s.n(), ext)
        .map(|_| ())
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, s: &str) -> StabilizerGroup {
        StabilizerGroup::parse(n, s).unwrap()
    }

    fn ops(s: &str) -> Vec<PauliOperator> {
        pauli::parse_list(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(group(1, "Z").k(), 0);
        assert_eq!(group(2, "XX,ZZ").k(), 0);
        assert_eq!(
            StabilizerGroup::parse(1, "X,Z"),
            Err(Error::Anticommuting(1, 2))
        );
        assert_eq!(
            StabilizerGroup::parse(2, "XZ,ZX,IY"),
            Err(Error::Anticommuting(1, 3))
        );
        assert_eq!(StabilizerGroup::parse(1, "iX"), Err(Error::NotHermitian(1)));
        assert_eq!(StabilizerGroup::parse(2, "ZZ,ZZ"), Err(Error::Dependent));
        // -ZZ and ZZ commute but together generate -I
        assert_eq!(StabilizerGroup::parse(2, "ZZ,-ZZ"), Err(Error::Dependent));
        assert!(matches!(
            StabilizerGroup::parse(2, "Z"),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn canonical_form_identifies_equal_groups() {
        assert_eq!(group(2, "XX,ZZ"), group(2, "ZZ,-YY"));
        assert_ne!(group(2, "XX,ZZ"), group(2, "XX,-ZZ"));
        assert_eq!(group(3, "ZZI,IZZ"), group(3, "ZIZ,ZZI"));
    }

    #[test]
    fn elements_examples() {
        assert_eq!(group(1, "Z").elements().unwrap(), ops("I,Z"));
        let mut e = group(2, "XX,ZZ").elements().unwrap();
        e.sort();
        let mut expect = ops("II,XX,ZZ,-YY");
        expect.sort();
        assert_eq!(e, expect);
        assert_eq!(StabilizerGroup::trivial(2).elements().unwrap(), ops("II"));
    }

    #[test]
    fn elements_are_closed() {
        let s = group(3, "XXX,ZZI,IZZ");
        let e = s.elements().unwrap();
        for a in &e {
            for b in &e {
                assert!(e.contains(&a.mul_unchecked(b)));
            }
        }
    }

    #[test]
    fn centralizer_dimensions() {
        assert_eq!(group(1, "Z").centralizer_image().rank(), 1);
        assert_eq!(group(2, "ZZ").centralizer_image().rank(), 3);
        assert_eq!(StabilizerGroup::trivial(2).centralizer_image().rank(), 4);
    }

    #[test]
    fn projector_examples() {
        let p = group(1, "Z").projector().unwrap();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(p, DMatrix::from_row_slice(2, 2, &[one, zero, zero, zero]));

        let bell = group(2, "XX,ZZ").projector().unwrap();
        let half = Complex64::new(0.5, 0.0);
        for r in 0..4 {
            for c in 0..4 {
                let corner = (r == 0 || r == 3) && (c == 0 || c == 3);
                assert_eq!(bell[(r, c)], if corner { half } else { zero });
            }
        }
        assert_eq!(&bell * &bell, bell);

        let id = StabilizerGroup::trivial(2).projector().unwrap();
        assert_eq!(id, DMatrix::identity(4, 4));
        assert!(StabilizerGroup::trivial(5).projector().is_err());
    }

    #[test]
    fn extension_examples() {
        let s = group(2, "ZZ");
        let ext = s.extend_to_maximal();
        verify_maximal_extension(&s, &ext).unwrap();
        assert_eq!(ext[0].to_string(), "ZZ");

        let ext = StabilizerGroup::trivial(1).extend_to_maximal();
        assert_eq!(ext, ops("X"));

        let full = group(2, "XX,ZZ");
        assert_eq!(full.extend_to_maximal(), full.generators().to_vec());
    }

    #[test]
    fn partner_examples() {
        assert_eq!(anticommuting_partners(&ops("Z")).unwrap(), ops("X"));
        let h = ops("ZI,IZ");
        assert_eq!(anticommuting_partners(&h).unwrap(), ops("XI,IX"));
        let h = ops("XX,ZZ");
        let g = anticommuting_partners(&h).unwrap();
        verify_symplectic_pairs(&h, &g).unwrap();

        assert!(anticommuting_partners(&ops("ZI")).is_err());
        assert!(anticommuting_partners(&ops("XI,ZI")).is_err());
    }

    #[test]
    fn partner_sweep_handles_every_maximal_set_at_two_qubits() {
        for basis in f2::enumerate_isotropic(2, 2).unwrap() {
            let s = StabilizerGroup::from_isotropic(&basis).unwrap();
            let h = s.generators().to_vec();
            let g = anticommuting_partners(&h).unwrap();
            verify_symplectic_pairs(&h, &g).unwrap();
        }
    }
}
