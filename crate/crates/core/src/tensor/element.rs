use alloc::string::ToString;
use core::fmt;

use num_traits::{One, Zero};

use super::TensorWord;
use crate::ito::{ItoElement, ItoSymbol};
use crate::linear::Terms;
use crate::scalar::parse_scalar;
use crate::{Error, Result, Scalar};

/// Element `(α₀, α₁, α₂, …)` of the tensor algebra `T(L)`, stored sparsely as
/// a map from words to exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    pub(crate) terms: Terms<TensorWord>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `(1, 0, 0, …)`.
    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::from_terms([(TensorWord::empty(), c)])
    }

    /// The embedded element `{w}`.
    pub fn word(w: impl Into<TensorWord>) -> Self {
        Self::from_terms([(w.into(), Scalar::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TensorWord, Scalar)>) -> Self {
        Self {
            terms: terms.into_iter().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &TensorWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in canonical word order.
    pub fn iter(&self) -> impl Iterator<Item = (&TensorWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: TensorWord, c: Scalar) {
        self.terms.add_term(w, c);
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.terms.iter().map(|(w, _)| w.rank()).max()
    }

    pub fn min_rank(&self) -> Option<usize> {
        self.terms.iter().map(|(w, _)| w.rank()).min()
    }

    /// Homogeneous component `α_rank`.
    pub fn component(&self, rank: usize) -> TensorElement {
        Self::from_terms(
            self.iter()
                .filter(|(w, _)| w.rank() == rank)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Drops every term of rank above `max_rank`.
    pub fn truncated(&self, max_rank: usize) -> TensorElement {
        let mut t = self.terms.clone();
        t.retain(|w, _| w.rank() <= max_rank);
        Self { terms: t }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut t = self.terms.clone();
        t.add_assign(&other.terms);
        Self { terms: t }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut t = self.terms.clone();
        t.add_assign(&other.terms.neg());
        Self { terms: t }
    }

    pub fn neg(&self) -> TensorElement {
        Self {
            terms: self.terms.neg(),
        }
    }

    pub fn scaled(&self, s: &Scalar) -> TensorElement {
        Self {
            terms: self.terms.scaled(s),
        }
    }

    /// `α ⊗ L`: appends the letter combination `L` to every word; the
    /// result has no rank-0 part.
    pub fn tensor_append(&self, l: &ItoElement) -> TensorElement {
        let mut out = Terms::default();
        for (w, c) in self.iter() {
            for (sym, lc) in l.iter() {
                let mut letters = w.letters().to_vec();
                letters.push(sym);
                out.add_term(TensorWord::new(letters), c * lc);
            }
        }
        Self { terms: out }
    }

    pub fn tensor_append_symbol(&self, sym: ItoSymbol) -> TensorElement {
        self.tensor_append(&ItoElement::basis(sym))
    }

    /// Parses the fixture format written by `Display`: one `<rational> : <word>`
    /// per line, blank lines ignored.
    pub fn parse(text: &str) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (c, w) = line.split_once(" : ").ok_or_else(|| Error::Parse(line.to_string()))?;
            out.add_term(TensorWord::parse(w)?, parse_scalar(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    /// One term per line as `<rational> : <word>`, in canonical word order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.iter() {
            writeln!(f, "{c} : {w}")?;
        }
        Ok(())
    }
}

/// The counit `ε`: the rank-0 coefficient.
pub fn counit(a: &TensorElement) -> Scalar {
    a.coeff(&TensorWord::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use ItoSymbol::*;

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&TensorElement::one()), int(1));
        assert_eq!(counit(&TensorElement::word([Dx, Dy])), int(0));
        let a = TensorElement::scalar(int(3)).add(&TensorElement::word([Dt]).scaled(&int(2)));
        assert_eq!(counit(&a), int(3));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = TensorElement::word([Dx]);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a).len(), 0);
    }

    #[test]
    fn tensor_append_kills_scalar_slot() {
        let a = TensorElement::one().add(&TensorElement::word([Dx]));
        let b = a.tensor_append_symbol(Dt);
        assert_eq!(counit(&b), int(0));
        assert_eq!(b.coeff(&TensorWord::from([Dt])), int(1));
        assert_eq!(b.coeff(&TensorWord::from([Dx, Dt])), int(1));
    }

    #[test]
    fn fixture_format() {
        let a = TensorElement::from_terms([
            (TensorWord::empty(), int(1)),
            (TensorWord::from([Dx, Dy]), int(-1)),
            (TensorWord::from([Dt]), Scalar::new(1.into(), 2.into())),
        ]);
        let text = alloc::format!("{a}");
        assert_eq!(text, "1 : 1\n1/2 : dT\n-1 : dX⊗dY\n");
        assert_eq!(TensorElement::parse(&text).unwrap(), a);
        assert!(TensorElement::parse("oops").is_err());
    }
}
