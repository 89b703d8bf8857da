//! Phase-tracked multi-qubit Pauli strings.
//!
//! Text form: `±[i]X0 Z3 Y5`, a mandatory sign, an optional `i`, then the
//! non-identity sites as letter-index tokens. The identity string renders as
//! `+I`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const AXES: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    /// Single-site product `self · rhs`.
    pub fn product(self, rhs: Pauli) -> (Phase, Pauli) {
        use Pauli::*;
        match (self, rhs) {
            (I, p) | (p, I) => (Phase::ONE, p),
            (X, X) | (Y, Y) | (Z, Z) => (Phase::ONE, I),
            (X, Y) => (Phase::I, Z),
            (Y, X) => (Phase::MINUS_I, Z),
            (Y, Z) => (Phase::I, X),
            (Z, Y) => (Phase::MINUS_I, X),
            (Z, X) => (Phase::I, Y),
            (X, Z) => (Phase::MINUS_I, Y),
        }
    }

    /// Flips the basis bit (X, Y).
    pub fn flips(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    /// Carries a `(-1)^bit` sign (Y, Z).
    pub fn signs(self) -> bool {
        matches!(self, Pauli::Y | Pauli::Z)
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn axis_name(self) -> char {
        self.as_char().to_ascii_lowercase()
    }

    pub fn from_char(c: char) -> Option<Pauli> {
        match c.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Element of `{+1, +i, -1, -i}`, stored as the exponent of `i` mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: i64) -> Phase {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `+1` or `-1` for real phases.
    pub fn real_sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl std::ops::MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    letters: Vec<Pauli>,
    phase: Phase,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        Self {
            letters: vec![Pauli::I; n],
            phase: Phase::ONE,
        }
    }

    pub fn from_letters(letters: Vec<Pauli>, phase: Phase) -> Self {
        Self { letters, phase }
    }

    /// `letter` on site `v`, identity elsewhere.
    pub fn single(n: usize, v: usize, letter: Pauli) -> Result<Self> {
        let mut p = Self::identity(n);
        p.set(v, letter)?;
        Ok(p)
    }

    /// `σ_a^ν σ_b^μ` for distinct sites.
    pub fn pair(n: usize, nu: usize, a: Pauli, mu: usize, b: Pauli) -> Result<Self> {
        if nu == mu {
            return Err(Error::SameVertex(nu));
        }
        let mut p = Self::single(n, nu, a)?;
        p.set(mu, b)?;
        Ok(p)
    }

    /// `letter` on every site of `s`, phase +1.
    pub fn uniform(s: &VertexSet, letter: Pauli) -> Self {
        let mut p = Self::identity(s.universe());
        for v in s {
            p.letters[v] = letter;
        }
        p
    }

    /// `σ_z^A`, with `σ_z^A σ_z^B = σ_z^{A △ B}`.
    pub fn z_string(s: &VertexSet) -> Self {
        Self::uniform(s, Pauli::Z)
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn letter(&self, v: usize) -> Pauli {
        self.letters[v]
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn set(&mut self, v: usize, letter: Pauli) -> Result<()> {
        let n = self.n();
        *self
            .letters
            .get_mut(v)
            .ok_or(Error::VertexOutOfRange { vertex: v, n })? = letter;
        Ok(())
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.n(),
            self.letters
                .iter()
                .enumerate()
                .filter(|(_, &l)| l != Pauli::I)
                .map(|(v, _)| v),
        )
        .expect("indices in range")
    }

    pub fn is_identity_letters(&self) -> bool {
        self.letters.iter().all(|&l| l == Pauli::I)
    }

    /// Phase ±1. Every tensor product of Pauli letters is itself hermitian.
    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    /// Exact product `self · other`; operators on different sites commute so
    /// the phase is accumulated site by site.
    pub fn compose(&self, other: &PauliString) -> Result<PauliString> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut phase = self.phase * other.phase;
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (ph, l) = a.product(b);
                phase *= ph;
                l
            })
            .collect();
        Ok(PauliString { letters, phase })
    }

    /// `self · letter_v` for a single-site factor, in place. Equivalent to
    /// composing with a one-letter string without allocating it.
    pub fn right_mul_site(&mut self, v: usize, letter: Pauli) -> Result<()> {
        let n = self.n();
        let cur = self
            .letters
            .get_mut(v)
            .ok_or(Error::VertexOutOfRange { vertex: v, n })?;
        let (ph, l) = cur.product(letter);
        *cur = l;
        self.phase *= ph;
        Ok(())
    }

    /// Sites carrying X or Y, as a basis-index mask. Requires `n <= 64`.
    pub fn flip_mask(&self) -> u64 {
        self.mask(Pauli::flips)
    }

    /// Sites carrying Y or Z, as a basis-index mask. Requires `n <= 64`.
    pub fn sign_mask(&self) -> u64 {
        self.mask(Pauli::signs)
    }

    pub fn count(&self, letter: Pauli) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    fn mask(&self, pred: impl Fn(Pauli) -> bool) -> u64 {
        debug_assert!(self.n() <= 64);
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| pred(l))
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    /// Parses the `±[i]X0 Z3` form over `n` sites.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = |msg: &str| Error::PauliParse(format!("{msg} in {text:?}"));
        let s = text.trim();
        let (negative, rest) = match s.chars().next() {
            Some('+') => (false, &s[1..]),
            Some('-') => (true, &s[1..]),
            _ => return Err(bad("missing sign")),
        };
        let (imag, rest) = match rest.strip_prefix('i') {
            Some(r) => (true, r),
            None => (false, rest),
        };
        let mut phase = Phase::from_exponent(2 * negative as i64 + imag as i64);
        let mut p = Self::identity(n);
        for tok in rest.split_whitespace() {
            let mut chars = tok.chars();
            let letter = chars
                .next()
                .and_then(Pauli::from_char)
                .ok_or_else(|| bad("unknown letter"))?;
            let idx = chars.as_str();
            if idx.is_empty() {
                if letter == Pauli::I {
                    continue;
                }
                return Err(bad("missing site index"));
            }
            let v: usize = idx.parse().map_err(|_| bad("bad site index"))?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            // repeated sites multiply in reading order
            let (ph, l) = p.letters[v].product(letter);
            phase *= ph;
            p.letters[v] = l;
        }
        p.phase = phase;
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, imag) = match self.phase.exponent() {
            0 => ('+', ""),
            1 => ('+', "i"),
            2 => ('-', ""),
            _ => ('-', "i"),
        };
        write!(f, "{sign}{imag}")?;
        if self.is_identity_letters() {
            return write!(f, "I");
        }
        let mut first = true;
        for (v, &l) in self.letters.iter().enumerate() {
            if l != Pauli::I {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}{}", l.as_char(), v)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for PauliString {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self}; n={})", self.n())
    }
}

/// Real unit 3-vector selecting the observable `v·σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementDirection([f64; 3]);

impl MeasurementDirection {
    pub const X: MeasurementDirection = MeasurementDirection([1.0, 0.0, 0.0]);
    pub const Y: MeasurementDirection = MeasurementDirection([0.0, 1.0, 0.0]);
    pub const Z: MeasurementDirection = MeasurementDirection([0.0, 0.0, 1.0]);

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitDirection(norm));
        }
        Ok(Self([x, y, z]))
    }

    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotUnitDirection(norm));
        }
        Ok(Self([x / norm, y / norm, z / norm]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    /// Component along `axis`; 0 for the identity.
    pub fn along(&self, axis: Pauli) -> f64 {
        match axis {
            Pauli::I => 0.0,
            Pauli::X => self.0[0],
            Pauli::Y => self.0[1],
            Pauli::Z => self.0[2],
        }
    }
}
