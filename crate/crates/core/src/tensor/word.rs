use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::ito::ItoSymbol;
use crate::{Error, Result};

/// A tensor word `{L₁⊗…⊗L_m}` over the Itô basis. The empty word is the unit.
///
/// Words order by length first, then lexicographically in the symbol order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<ItoSymbol>);

impl TensorWord {
    pub fn new(letters: Vec<ItoSymbol>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(sym: ItoSymbol) -> Self {
        Self(alloc::vec![sym])
    }

    pub fn repeat(sym: ItoSymbol, n: usize) -> Self {
        Self(alloc::vec![sym; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[ItoSymbol] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<ItoSymbol> {
        self.0
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut v = Vec::with_capacity(self.rank() + other.rank());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Prefix of length `i` and the remaining suffix.
    pub fn split_at(&self, i: usize) -> (TensorWord, TensorWord) {
        let (a, b) = self.0.split_at(i);
        (Self(a.to_vec()), Self(b.to_vec()))
    }

    /// Whether any letter is `dX` or `dY`.
    pub fn has_noise(&self) -> bool {
        self.0.iter().any(|s| s.is_noise())
    }

    /// Every word of exactly `rank` letters, in canonical order.
    pub fn all_of_rank(rank: usize) -> impl Iterator<Item = TensorWord> {
        let total = 3usize.pow(rank as u32);
        (0..total).map(move |mut code| {
            let mut v = alloc::vec![ItoSymbol::Dx; rank];
            for slot in v.iter_mut().rev() {
                *slot = ItoSymbol::from_code((code % 3) as u8).unwrap();
                code /= 3;
            }
            TensorWord(v)
        })
    }

    /// Parses `1` (the empty word) or `dX⊗dT⊗…`; `*` is accepted for `⊗`.
    pub fn parse(s: &str) -> Result<TensorWord> {
        let t = s.trim();
        if t == "1" {
            return Ok(Self::empty());
        }
        t.split(['⊗', '*'])
            .map(ItoSymbol::parse)
            .collect::<Result<Vec<_>>>()
            .map(Self)
            .map_err(|_| Error::Parse(t.into()))
    }
}

impl From<Vec<ItoSymbol>> for TensorWord {
    fn from(v: Vec<ItoSymbol>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[ItoSymbol; N]> for TensorWord {
    fn from(v: [ItoSymbol; N]) -> Self {
        Self(v.to_vec())
    }
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("⊗")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}
