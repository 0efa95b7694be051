//! Root data for `sl(n)` (type A_{n-1}) and `so(2n)` (type D_n): the Weyl
//! vector, fundamental weights, `λ+ρ` for scalar parameters, and the
//! two-step nilpotent parabolics with their nilradical dimensions.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{ExactScalar, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieKind {
    A,
    D,
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieKind::A => "A",
            LieKind::D => "D",
        })
    }
}

/// `sl(n)` for kind A, `so(2n)` for kind D. Weight vectors have `n` entries
/// in both cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    kind: LieKind,
    n: usize,
}

impl LieType {
    pub fn new(kind: LieKind, n: usize) -> Result<Self> {
        let min = match kind {
            LieKind::A => 2,
            LieKind::D => 4,
        };
        if n < min {
            return Err(Error::InvalidRank { kind, n });
        }
        Ok(LieType { kind, n })
    }

    pub fn kind(&self) -> LieKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        match self.kind {
            LieKind::A => self.n - 1,
            LieKind::D => self.n,
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, min: 1, max: self.rank() })
        }
    }

    /// Multiplicity of the simple root `α_i` in the highest root.
    pub fn highest_root_multiplicity(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(match self.kind {
            LieKind::A => 1,
            LieKind::D if i == 1 || i >= self.n - 1 => 1,
            LieKind::D => 2,
        })
    }

    /// Largest possible GK dimension, i.e. the number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        match self.kind {
            LieKind::A => self.n * (self.n - 1) / 2,
            LieKind::D => self.n * self.n - self.n,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LieKind::A => write!(f, "sl({})", self.n),
            LieKind::D => write!(f, "so({})", 2 * self.n),
        }
    }
}

/// A weight in the `e_1, …, e_n` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<ExactScalar>,
}

impl WeightVector {
    pub fn new(entries: Vec<ExactScalar>) -> Self {
        WeightVector { entries }
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_entries(self) -> Vec<ExactScalar> {
        self.entries
    }

    fn add_scaled(&mut self, coords: &[Rational], factor: &ExactScalar) {
        for (entry, c) in self.entries.iter_mut().zip(coords) {
            if !c.is_zero() {
                *entry = &*entry + &factor.scale(*c);
            }
        }
    }
}

impl From<Vec<ExactScalar>> for WeightVector {
    fn from(entries: Vec<ExactScalar>) -> Self {
        WeightVector::new(entries)
    }
}

fn rho_coords(lie: LieType) -> Vec<Rational> {
    let n = lie.n as i64;
    match lie.kind {
        LieKind::A => (0..n).map(|i| Rational::new(n - 1 - 2 * i, 2)).collect(),
        LieKind::D => (0..n).map(|i| Rational::from_integer(n - 1 - i)).collect(),
    }
}

fn fundamental_coords(lie: LieType, i: usize) -> Result<Vec<Rational>> {
    lie.check_index(i)?;
    let n = lie.n;
    let coords = match lie.kind {
        LieKind::A => {
            let (ni, ii) = (n as i64, i as i64);
            (0..n)
                .map(|j| if j < i { Rational::new(ni - ii, ni) } else { Rational::new(-ii, ni) })
                .collect()
        }
        LieKind::D if i <= n - 2 => (0..n)
            .map(|j| if j < i { Rational::from_integer(1) } else { Rational::zero() })
            .collect(),
        LieKind::D => {
            let half = Rational::new(1, 2);
            let mut v: Vec<Rational> = (0..n).map(|_| half).collect();
            if i == n - 1 {
                v[n - 1] = -half;
            }
            v
        }
    };
    Ok(coords)
}

/// Half the sum of the positive roots.
pub fn rho(lie: LieType) -> WeightVector {
    rho_coords(lie).into_iter().map(ExactScalar::from_rational).collect::<Vec<_>>().into()
}

/// The fundamental weight dual to the `i`-th simple coroot (1-based).
pub fn fundamental_weight(lie: LieType, i: usize) -> Result<WeightVector> {
    Ok(fundamental_coords(lie, i)?
        .into_iter()
        .map(ExactScalar::from_rational)
        .collect::<Vec<_>>()
        .into())
}

/// `Σ z_i ξ_i + ρ` for the given `(index, coefficient)` pairs.
pub fn weight_plus_rho(lie: LieType, terms: &[(usize, ExactScalar)]) -> Result<WeightVector> {
    let mut v = rho(lie);
    for (i, z) in terms {
        let coords = fundamental_coords(lie, *i)?;
        v.add_scaled(&coords, z);
    }
    Ok(v)
}

/// `z1·ξ_p + z2·ξ_q + ρ`.
pub fn lambda_plus_rho(setup: &ParabolicSetup, z1: &ExactScalar, z2: &ExactScalar) -> WeightVector {
    weight_plus_rho(setup.lie, &[(setup.p, z1.clone()), (setup.q, z2.clone())])
        .expect("setup indices validated at construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub step: usize,
    pub maximal: bool,
}

/// Nilpotency step of the nilradical of the parabolic obtained by removing
/// the given simple roots: the sum of their multiplicities in the highest
/// root.
pub fn classify_parabolic(lie: LieType, removed: &[usize]) -> Result<NilpotencyReport> {
    let mut idx: Vec<usize> = removed.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() {
        return Err(Error::EmptyRootSet);
    }
    let step = idx.iter().map(|&i| lie.highest_root_multiplicity(i)).sum::<Result<usize>>()?;
    Ok(NilpotencyReport { step, maximal: idx.len() == 1 })
}

/// A two-step nilpotent, non-maximal parabolic given by removing `α_p` and `α_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParabolicSetup {
    lie: LieType,
    p: usize,
    q: usize,
    dim_u: usize,
}

impl ParabolicSetup {
    pub fn new(lie: LieType, p: usize, q: usize) -> Result<Self> {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        lie.check_index(p)?;
        lie.check_index(q)?;
        let report = classify_parabolic(lie, &[p, q])?;
        if report.step != 2 || report.maximal {
            return Err(Error::NotTwoStepNonMaximal { step: report.step, maximal: report.maximal });
        }
        let mut setup = ParabolicSetup { lie, p, q, dim_u: 0 };
        setup.dim_u = dim_nilradical(&setup);
        Ok(setup)
    }

    /// Shorthand for `LieType::new` followed by `ParabolicSetup::new`.
    pub fn of(kind: LieKind, n: usize, p: usize, q: usize) -> Result<Self> {
        Self::new(LieType::new(kind, n)?, p, q)
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn kind(&self) -> LieKind {
        self.lie.kind
    }

    pub fn n(&self) -> usize {
        self.lie.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `q - p`.
    pub fn k(&self) -> usize {
        self.q - self.p
    }

    /// `min{p, n-q}`; only meaningful for type A.
    pub fn m(&self) -> usize {
        self.p.min(self.lie.n.saturating_sub(self.q))
    }

    /// `max{p, n-q}`; only meaningful for type A.
    pub fn h(&self) -> usize {
        self.p.max(self.lie.n.saturating_sub(self.q))
    }

    pub fn dim_u(&self) -> usize {
        self.dim_u
    }

    /// Every valid setup of the given kind with `n_min <= n <= n_max`, in
    /// order of `(n, p, q)`.
    pub fn enumerate(kind: LieKind, n_max: usize) -> Vec<ParabolicSetup> {
        let mut out = Vec::new();
        let n_min = match kind {
            LieKind::A => 3,
            LieKind::D => 4,
        };
        for n in n_min..=n_max {
            let lie = match LieType::new(kind, n) {
                Ok(lie) => lie,
                Err(_) => continue,
            };
            for p in 1..=lie.rank() {
                for q in p + 1..=lie.rank() {
                    if let Ok(s) = ParabolicSetup::new(lie, p, q) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ParabolicSetup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (p,q)=({},{})", self.lie, self.p, self.q)
    }
}

pub fn dim_nilradical(setup: &ParabolicSetup) -> usize {
    let (n, p, q) = (setup.lie.n, setup.p, setup.q);
    match setup.lie.kind {
        LieKind::A => q * (n - q) + p * (q - p),
        LieKind::D => (n * n + n - 2) / 2,
    }
}
