//! The phased Pauli group in the normal form `i^k X(a) Z(b)`.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::f2::{BitVec2n, MAX_QUBITS};

/// Complex `2^n × 2^n` matrix used by the dense oracle.
pub type DenseMatrix = DMatrix<Complex64>;

/// Default qubit bound for dense realizations.
pub const DEFAULT_DENSE_LIMIT: usize = 4;

/// `i^phase · X(a) Z(b)` on `n` qubits.
///
/// The normal form is unique per group element, so derived equality is group
/// equality (phases included).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    bits: BitVec2n,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            bits: BitVec2n::zero(n),
            phase: 0,
        }
    }

    pub fn new(phase: u8, bits: BitVec2n) -> Self {
        PauliOperator {
            bits,
            phase: phase % 4,
        }
    }

    /// The Hermitian operator with check vector `v` whose letter form carries
    /// no sign, e.g. `(11|11)` ↦ `YY`.
    pub fn from_check_vector(v: BitVec2n) -> Self {
        let ys = (v.x() & v.z()).count_ones() as u8;
        PauliOperator::new(ys % 4, v)
    }

    pub fn n(&self) -> usize {
        self.bits.n()
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn x_bits(&self) -> u64 {
        self.bits.x()
    }

    pub fn z_bits(&self) -> u64 {
        self.bits.z()
    }

    /// `r(g) = a ⊕ b`; the phase is dropped.
    pub fn check_vector(&self) -> BitVec2n {
        self.bits
    }

    fn same_size(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// Normal form of `self · other`.
    ///
    /// Moving `Z(b₁)` past `X(a₂)` costs `(-1)^{<b₁,a₂>}`, so the phase is
    /// `k₁ + k₂ + 2<b₁,a₂>` mod 4.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_size(other)?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let swap = (self.z_bits() & other.x_bits()).count_ones() as u8 & 1;
        PauliOperator {
            bits: self.bits + other.bits,
            phase: (self.phase + other.phase + 2 * swap) % 4,
        }
    }

    /// `(i^k X Z)† = i^{-k} Z X = i^{-k + 2<a,b>} X Z`.
    pub fn adjoint(&self) -> Self {
        let ab = (self.x_bits() & self.z_bits()).count_ones() as u8 & 1;
        PauliOperator {
            bits: self.bits,
            phase: (4 - self.phase + 2 * ab) % 4,
        }
    }

    pub fn negate(&self) -> Self {
        PauliOperator {
            bits: self.bits,
            phase: (self.phase + 2) % 4,
        }
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.same_size(other)?;
        Ok(!self.bits.twisted(&other.bits))
    }

    /// `g† = g` iff `k + <a,b>` is even.
    pub fn is_hermitian(&self) -> bool {
        let ab = (self.x_bits() & self.z_bits()).count_ones() as u8;
        (self.phase + ab).is_multiple_of(2)
    }

    pub fn is_scalar(&self) -> bool {
        self.bits.is_zero()
    }

    /// `self ⊗ other` on `n₁ + n₂` qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (n1, n2) = (self.n(), other.n());
        if n1 + n2 > MAX_QUBITS {
            return Err(Error::Capacity {
                what: "qubit count",
                requested: n1 + n2,
                limit: MAX_QUBITS,
            });
        }
        let x = self.x_bits() | (other.x_bits() << n1);
        let z = self.z_bits() | (other.z_bits() << n1);
        Ok(PauliOperator {
            bits: BitVec2n::from_parts(n1 + n2, x, z),
            phase: (self.phase + other.phase) % 4,
        })
    }

    /// Single-qubit letter at qubit `j`.
    pub fn letter(&self, j: usize) -> char {
        match ((self.x_bits() >> j) & 1, (self.z_bits() >> j) & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, 1) => 'Z',
            _ => 'Y',
        }
    }

    /// Exact matrix `i^k X(a) Z(b)`, qubit 1 as the leftmost Kronecker factor.
    pub fn to_dense(&self) -> Result<DenseMatrix> {
        self.to_dense_within(DEFAULT_DENSE_LIMIT)
    }

    pub fn to_dense_within(&self, limit: usize) -> Result<DenseMatrix> {
        let n = self.n();
        if n > limit {
            return Err(Error::Capacity {
                what: "dense qubit count",
                requested: n,
                limit,
            });
        }
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let x = DMatrix::from_row_slice(2, 2, &[zero, one, one, zero]);
        let z = DMatrix::from_row_slice(2, 2, &[one, zero, zero, -one]);
        let id = DMatrix::<Complex64>::identity(2, 2);
        let mut acc = DMatrix::from_element(1, 1, I_POWERS[self.phase as usize]);
        for j in 0..n {
            let mut factor = id.clone();
            if (self.x_bits() >> j) & 1 == 1 {
                factor = &factor * &x;
            }
            if (self.z_bits() >> j) & 1 == 1 {
                factor = &factor * &z;
            }
            acc = acc.kronecker(&factor);
        }
        Ok(acc)
    }
}

const I_POWERS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

impl std::ops::Mul for PauliOperator {
    type Output = PauliOperator;

    /// Panics on size mismatch; use [`PauliOperator::multiply`] otherwise.
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs).expect("Pauli size mismatch")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Grammar: `sign? letter+` with sign in `+ - i +i -i`, letters `IXYZ`.
    fn from_str(s: &str) -> Result<Self> {
        let (mut phase, body, offset) = if let Some(r) = s.strip_prefix("+i") {
            (1u8, r, 2)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r, 2)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r, 1)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r, 1)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r, 1)
        } else {
            (0, s, 0)
        };
        let n = body.chars().count();
        if n == 0 {
            return Err(Error::Parse {
                position: offset,
                message: "expected at least one of I, X, Y, Z".into(),
            });
        }
        if n > MAX_QUBITS {
            return Err(Error::Capacity {
                what: "qubit count",
                requested: n,
                limit: MAX_QUBITS,
            });
        }
        let (mut x, mut z) = (0u64, 0u64);
        for (j, c) in body.chars().enumerate() {
            match c {
                'I' => {}
                'X' => x |= 1 << j,
                'Z' => z |= 1 << j,
                'Y' => {
                    // Y = i·XZ
                    x |= 1 << j;
                    z |= 1 << j;
                    phase += 1;
                }
                other => {
                    return Err(Error::Parse {
                        position: offset + j,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(PauliOperator::new(phase, BitVec2n::from_parts(n, x, z)))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ys = (self.x_bits() & self.z_bits()).count_ones() as u8;
        let sign = match (self.phase + 3 * ys) % 4 {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(sign)?;
        for j in 0..self.n() {
            write!(f, "{}", self.letter(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a comma-separated generator list such as `"ZZI,IZZ"`.
/// An empty string yields an empty list.
pub fn parse_list(s: &str) -> Result<Vec<PauliOperator>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for part in s.split(',') {
        let op = part.trim().parse::<PauliOperator>().map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + offset,
                message,
            },
            e => e,
        })?;
        out.push(op);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parse_examples() {
        let x = p("X");
        assert_eq!((x.phase(), x.x_bits(), x.z_bits()), (0, 1, 0));
        let y = p("Y");
        assert_eq!((y.phase(), y.x_bits(), y.z_bits()), (1, 1, 1));
        let g = p("-iZZ");
        assert_eq!((g.phase(), g.x_bits(), g.z_bits()), (3, 0, 0b11));
        assert_eq!(p("+iX").phase(), 1);
        assert_eq!(p("iX").phase(), 1);
        assert_eq!(p("+X"), p("X"));
    }

    #[test]
    fn parse_errors_report_position() {
        assert_eq!(
            "XQ".parse::<PauliOperator>(),
            Err(Error::Parse {
                position: 1,
                message: "unexpected character 'Q'".into()
            })
        );
        assert!(matches!(
            "-i".parse::<PauliOperator>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!("".parse::<PauliOperator>().is_err());
        assert!("x".parse::<PauliOperator>().is_err());
        assert!(matches!(
            parse_list("XX,ZQ"),
            Err(Error::Parse { position: 4, .. })
        ));
    }

    #[test]
    fn format_examples() {
        let bits = |n, x, z| BitVec2n::from_parts(n, x, z);
        assert_eq!(PauliOperator::new(0, bits(1, 1, 0)).to_string(), "X");
        assert_eq!(PauliOperator::new(1, bits(1, 1, 1)).to_string(), "Y");
        assert_eq!(PauliOperator::new(2, bits(1, 0, 1)).to_string(), "-Z");
        assert_eq!(PauliOperator::new(0, bits(1, 1, 1)).to_string(), "-iY");
        assert_eq!(p("-iZZ").to_string(), "-iZZ");
    }

    #[test]
    fn check_vector_examples() {
        assert_eq!(p("X").check_vector(), "1|0".parse().unwrap());
        assert_eq!(p("iY").check_vector(), "1|1".parse().unwrap());
        assert_eq!(p("IZ").check_vector(), "00|01".parse().unwrap());
    }

    #[test]
    fn multiply_examples() {
        let xz = p("X") * p("Z");
        assert_eq!((xz.phase(), xz.x_bits(), xz.z_bits()), (0, 1, 1));
        assert_eq!(xz, p("-iY"));
        let zx = p("Z") * p("X");
        assert_eq!((zx.phase(), zx.x_bits(), zx.z_bits()), (2, 1, 1));
        assert_eq!(zx, p("iY"));
        assert_eq!(p("Y") * p("Y"), p("I"));
        assert!(p("X").multiply(&p("XX")).is_err());
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(p("X").adjoint(), p("X"));
        assert_eq!(p("iX").adjoint(), p("-iX"));
        assert_eq!(p("Y").adjoint(), p("Y"));
        for s in ["iY", "-XZY", "iZY"] {
            let g = p(s);
            let prod = g.adjoint() * g;
            assert!(prod.is_scalar());
            assert_eq!(prod.phase(), 0);
        }
    }

    #[test]
    fn predicates() {
        assert!(p("XZ").commutes(&p("ZX")).unwrap());
        assert!(!p("X").commutes(&p("Z")).unwrap());
        assert!(p("X").commutes(&p("ZZ")).is_err());
        assert!(p("Y").is_hermitian());
        assert!(!p("iX").is_hermitian());
        assert!(p("-I").is_scalar());
        assert!(!p("Z").is_scalar());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(p("X").tensor(&p("I")).unwrap().to_string(), "XI");
        let t = p("iX").tensor(&p("iZ")).unwrap();
        assert_eq!((t.phase(), t.x_bits(), t.z_bits()), (2, 0b01, 0b10));
        assert_eq!(t, p("-XZ"));
        let yy = p("Y").tensor(&p("Y")).unwrap();
        assert_eq!((yy.phase(), yy.x_bits(), yy.z_bits()), (2, 0b11, 0b11));
        assert_eq!(yy, p("YY"));
    }

    #[test]
    fn dense_examples() {
        let z = p("Z").to_dense().unwrap();
        assert_eq!(
            z,
            DMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)])
        );
        let y = p("Y").to_dense().unwrap();
        assert_eq!(
            y,
            DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)])
        );
        let ix = p("IX").to_dense().unwrap();
        // X acting on the second tensor factor swaps within each 2-block.
        for r in 0..4 {
            for col in 0..4 {
                let expect = if r / 2 == col / 2 && r != col {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(ix[(r, col)], c(expect, 0.0));
            }
        }
        assert!(p("XXXXX").to_dense().is_err());
        assert!(p("XXXXX").to_dense_within(5).is_ok());
    }

    #[test]
    fn hermitian_representative_has_no_sign() {
        for w in BitVec2n::all(2) {
            let g = PauliOperator::from_check_vector(w);
            assert!(g.is_hermitian());
            assert_eq!(g.check_vector(), w);
            assert!(!g.to_string().starts_with(['-', 'i']));
        }
    }
}
