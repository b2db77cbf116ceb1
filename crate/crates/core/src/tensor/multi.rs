use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::shuffle::product_capped;
use super::{counit, TensorElement, TensorWord};
use crate::linear::Terms;
use crate::{Error, Result, Scalar};

/// Element of the `arity`-fold tensor power of `T(L)`, stored as a sparse map
/// from tuples of words to coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiTensorElement {
    arity: usize,
    terms: Terms<Vec<TensorWord>>,
}

impl MultiTensorElement {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: Terms::default(),
        }
    }

    /// `1 ⊗ 1 ⊗ … ⊗ 1`.
    pub fn unit(arity: usize) -> Self {
        let mut m = Self::zero(arity);
        m.terms.add_term(vec![TensorWord::empty(); arity], Scalar::one());
        m
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<TensorWord>, Scalar)>) -> Result<Self> {
        let mut m = Self::zero(arity);
        for (k, c) in terms {
            if k.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: k.len(),
                });
            }
            m.terms.add_term(k, c);
        }
        Ok(m)
    }

    /// The pure tensor `a₁ ⊗ a₂ ⊗ … ⊗ a_N`.
    pub fn tensor_of(factors: &[TensorElement]) -> Self {
        let mut keys: Vec<(Vec<TensorWord>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::with_capacity(keys.len() * f.len());
            for (k, c) in &keys {
                for (w, fc) in f.iter() {
                    let mut k2 = k.clone();
                    k2.push(w.clone());
                    next.push((k2, c * fc));
                }
            }
            keys = next;
        }
        let mut m = Self::zero(factors.len());
        for (k, c) in keys {
            m.terms.add_term(k, c);
        }
        m
    }

    /// Embeds a single element as an arity-1 multitensor.
    pub fn single(a: &TensorElement) -> Self {
        Self::tensor_of(core::slice::from_ref(a))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[TensorWord]) -> Scalar {
        self.terms.get(&key.to_vec()).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<TensorWord>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_arity(self, other)?;
        let mut t = self.terms.clone();
        t.add_assign(&other.terms);
        Ok(Self {
            arity: self.arity,
            terms: t,
        })
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        Self {
            arity: self.arity,
            terms: self.terms.scaled(s),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            arity: self.arity,
            terms: self.terms.neg(),
        }
    }

    /// Concatenates the slots of every key into one word.
    pub fn flatten(&self) -> TensorElement {
        TensorElement::from_terms(self.iter().map(|(k, c)| {
            let w = k.iter().fold(TensorWord::empty(), |acc, w| acc.concat(w));
            (w, c.clone())
        }))
    }

    /// For arity 1, the underlying element.
    pub fn into_single(self) -> Result<TensorElement> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: 1,
            });
        }
        Ok(TensorElement::from_terms(
            self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())),
        ))
    }

    /// Applies the coproduct to slot `slot`, giving arity `arity + 1`.
    pub fn expand_slot(&self, slot: usize) -> Result<Self> {
        if slot >= self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: slot + 1,
            });
        }
        let mut out = Self::zero(self.arity + 1);
        for (k, c) in self.iter() {
            let w = &k[slot];
            for i in 0..=w.rank() {
                let (pre, suf) = w.split_at(i);
                let mut k2 = Vec::with_capacity(self.arity + 1);
                k2.extend_from_slice(&k[..slot]);
                k2.push(pre);
                k2.push(suf);
                k2.extend_from_slice(&k[slot + 1..]);
                out.terms.add_term(k2, c.clone());
            }
        }
        Ok(out)
    }

    /// Applies the counit to slot `slot`, giving arity `arity - 1`. Needs
    /// `arity ≥ 2`.
    pub fn contract_slot(&self, slot: usize) -> Result<Self> {
        if self.arity < 2 || slot >= self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: slot + 1,
            });
        }
        let mut out = Self::zero(self.arity - 1);
        for (k, c) in self.iter() {
            if k[slot].is_empty() {
                let mut k2 = k.clone();
                k2.remove(slot);
                out.terms.add_term(k2, c.clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MultiTensorElement {
    /// One term per line as `<rational> : <word> | <word> | …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.iter() {
            write!(f, "{c} :")?;
            for (i, w) in k.iter().enumerate() {
                if i > 0 {
                    f.write_str(" |")?;
                }
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_arity(a: &MultiTensorElement, b: &MultiTensorElement) -> Result<()> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch {
            left: a.arity,
            right: b.arity,
        });
    }
    Ok(())
}

/// Deconcatenation coproduct: every word goes to the sum of its
/// `(prefix, suffix)` splits, trivial ones included.
pub fn coproduct(a: &TensorElement) -> MultiTensorElement {
    MultiTensorElement::single(a)
        .expand_slot(0)
        .expect("slot 0 exists in arity 1")
}

/// `Δ^(N)`, with `Δ^(1)` the identity and `Δ^(N) = (Δ ⊗ Id) ∘ Δ^(N−1)`.
pub fn iterated_coproduct(a: &TensorElement, n: usize) -> Result<MultiTensorElement> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    let mut m = MultiTensorElement::single(a);
    for _ in 1..n {
        m = m.expand_slot(0)?;
    }
    Ok(m)
}

/// Slot-wise sticky shuffle product `(a⊗a')(b⊗b') = ab ⊗ a'b'`.
pub fn multitensor_product(a: &MultiTensorElement, b: &MultiTensorElement) -> Result<MultiTensorElement> {
    multitensor_product_capped(a, b, None)
}

/// [`multitensor_product`] keeping only keys whose every slot has rank
/// `≤ slot_cap`.
pub fn multitensor_product_capped(
    a: &MultiTensorElement,
    b: &MultiTensorElement,
    slot_cap: Option<usize>,
) -> Result<MultiTensorElement> {
    check_arity(a, b)?;
    let mut out = MultiTensorElement::zero(a.arity);
    for (ka, ca) in a.iter() {
        'pairs: for (kb, cb) in b.iter() {
            let mut slots = Vec::with_capacity(a.arity);
            for (wa, wb) in ka.iter().zip(kb) {
                let p = product_capped(
                    &TensorElement::word(wa.clone()),
                    &TensorElement::word(wb.clone()),
                    slot_cap,
                );
                if p.is_zero() {
                    continue 'pairs;
                }
                slots.push(p);
            }
            let prod = MultiTensorElement::tensor_of(&slots);
            let c = ca * cb;
            for (k, pc) in prod.iter() {
                out.terms.add_term(k.clone(), &c * pc);
            }
        }
    }
    Ok(out)
}

/// Restriction to keys whose slot ranks equal `ranks`.
pub fn multirank_component(a: &MultiTensorElement, ranks: &[usize]) -> Result<MultiTensorElement> {
    if ranks.len() != a.arity {
        return Err(Error::MultirankLength {
            got: ranks.len(),
            arity: a.arity,
        });
    }
    let mut out = MultiTensorElement::zero(a.arity);
    for (k, c) in a.iter() {
        if k.iter().zip(ranks).all(|(w, &r)| w.rank() == r) {
            out.terms.add_term(k.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Reads the rank-`n` component of `a` off `Δ^(n) a` at multirank `(1,…,1)`.
///
/// `n = 0` gives the counit as an arity-1 scalar, `n = 1` the rank-1
/// component as an arity-1 element.
pub fn recover_component(a: &TensorElement, n: usize) -> MultiTensorElement {
    match n {
        0 => MultiTensorElement::single(&TensorElement::scalar(counit(a))),
        1 => MultiTensorElement::single(&a.component(1)),
        _ => {
            let d = iterated_coproduct(a, n).expect("n ≥ 2");
            multirank_component(&d, &vec![1; n]).expect("arity n")
        }
    }
}
