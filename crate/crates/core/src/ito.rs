//! The planar Itô algebra `L = span{dX, dY, dT}`.
//!
//! Multiplication follows the table for planar Brownian motion:
//! `dX·dX = dY·dY = dT`, every other product of basis differentials is zero.
//! The one-dimensional algebra `span{dX, dT}` is the subalgebra that never
//! uses `dY`.

use alloc::vec::Vec;
use core::fmt;

use crate::linear::Terms;
use crate::scalar::int;
use crate::{Error, Result, Scalar};

/// Basis differential. The derived order `Dx < Dy < Dt` is the canonical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ItoSymbol {
    Dx,
    Dy,
    Dt,
}

impl ItoSymbol {
    pub const ALL: [ItoSymbol; 3] = [ItoSymbol::Dx, ItoSymbol::Dy, ItoSymbol::Dt];

    /// Canonical byte encoding: `dX = 0`, `dY = 1`, `dT = 2`.
    pub const fn code(self) -> u8 {
        match self {
            ItoSymbol::Dx => 0,
            ItoSymbol::Dy => 1,
            ItoSymbol::Dt => 2,
        }
    }

    pub const fn from_code(code: u8) -> Option<ItoSymbol> {
        match code {
            0 => Some(ItoSymbol::Dx),
            1 => Some(ItoSymbol::Dy),
            2 => Some(ItoSymbol::Dt),
            _ => None,
        }
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            ItoSymbol::Dx => "dX",
            ItoSymbol::Dy => "dY",
            ItoSymbol::Dt => "dT",
        }
    }

    pub fn parse(s: &str) -> Result<ItoSymbol> {
        match s.trim() {
            "dX" => Ok(ItoSymbol::Dx),
            "dY" => Ok(ItoSymbol::Dy),
            "dT" => Ok(ItoSymbol::Dt),
            other => Err(Error::Parse(other.into())),
        }
    }

    /// Whether the differential is a martingale integrator (`dX` or `dY`).
    pub const fn is_noise(self) -> bool {
        !matches!(self, ItoSymbol::Dt)
    }
}

impl fmt::Display for ItoSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A multiplication table on the basis whose entries are `0` or a single basis
/// symbol with coefficient one. This covers the planar table and lets callers
/// check alternative (e.g. deliberately corrupted) tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ItoTable {
    entries: [[Option<ItoSymbol>; 3]; 3],
}

impl ItoTable {
    pub const PLANAR: ItoTable = ItoTable {
        entries: [
            [Some(ItoSymbol::Dt), None, None],
            [None, Some(ItoSymbol::Dt), None],
            [None, None, None],
        ],
    };

    pub const fn new(entries: [[Option<ItoSymbol>; 3]; 3]) -> Self {
        Self { entries }
    }

    #[inline]
    pub const fn mul(&self, x: ItoSymbol, y: ItoSymbol) -> Option<ItoSymbol> {
        self.entries[x.code() as usize][y.code() as usize]
    }

    fn mul_opt(&self, x: Option<ItoSymbol>, y: Option<ItoSymbol>) -> Option<ItoSymbol> {
        self.mul(x?, y?)
    }

    /// First basis triple violating `(xy)z = x(yz)`, if any.
    pub fn associativity_violation(&self) -> Option<(ItoSymbol, ItoSymbol, ItoSymbol)> {
        triples().find(|&(x, y, z)| self.mul_opt(self.mul(x, y), Some(z)) != self.mul_opt(Some(x), self.mul(y, z)))
    }

    pub fn commutativity_violation(&self) -> Option<(ItoSymbol, ItoSymbol)> {
        ItoSymbol::ALL
            .iter()
            .flat_map(|&x| ItoSymbol::ALL.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| self.mul(x, y) != self.mul(y, x))
    }

    /// First basis triple whose product is nonzero.
    pub fn nilpotency_violation(&self) -> Option<(ItoSymbol, ItoSymbol, ItoSymbol)> {
        triples().find(|&(x, y, z)| self.mul_opt(self.mul(x, y), Some(z)).is_some())
    }
}

fn triples() -> impl Iterator<Item = (ItoSymbol, ItoSymbol, ItoSymbol)> {
    ItoSymbol::ALL.into_iter().flat_map(|x| {
        ItoSymbol::ALL
            .into_iter()
            .flat_map(move |y| ItoSymbol::ALL.into_iter().map(move |z| (x, y, z)))
    })
}

/// Exact linear combination of basis differentials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ItoElement {
    terms: Terms<ItoSymbol>,
}

impl ItoElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(sym: ItoSymbol) -> Self {
        Self::from_terms([(sym, int(1))])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ItoSymbol, Scalar)>) -> Self {
        Self {
            terms: terms.into_iter().collect(),
        }
    }

    pub fn coeff(&self, sym: ItoSymbol) -> Scalar {
        self.terms.get(&sym).cloned().unwrap_or_else(|| int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ItoSymbol, &Scalar)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        t.add_assign(&other.terms);
        Self { terms: t }
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        Self {
            terms: self.terms.scaled(s),
        }
    }
}

impl fmt::Display for ItoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<_> = self.iter().collect();
        for (i, (s, c)) in parts.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{s}")?;
        }
        Ok(())
    }
}

/// Product of two basis differentials in the planar table.
pub fn ito_mul(x: ItoSymbol, y: ItoSymbol) -> ItoElement {
    match ItoTable::PLANAR.mul(x, y) {
        Some(s) => ItoElement::basis(s),
        None => ItoElement::zero(),
    }
}

/// Bilinear extension of [`ito_mul`].
pub fn ito_mul_elem(a: &ItoElement, b: &ItoElement) -> ItoElement {
    let mut out = Terms::default();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            if let Some(s) = ItoTable::PLANAR.mul(x, y) {
                out.add_term(s, cx * cy);
            }
        }
    }
    ItoElement { terms: out }
}
