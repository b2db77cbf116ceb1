//! The sticky shuffle product on `T(L)`.
//!
//! Two reference definitions are provided for single words, the last-letter
//! recursion ([`shuffle_words_recursive`]) and the sum over covering pairs of
//! slot sets ([`shuffle_words_subsets`]). [`product`] uses a third,
//! pruned left-to-right merge that never materialises terms above a rank cap
//! or terms killed by a zero entry of the Itô table.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{TensorElement, TensorWord};
use crate::ito::{ito_mul, ItoElement, ItoSymbol, ItoTable};
use crate::linear::Terms;
use crate::Scalar;

/// Word product by the three-term recursion on last letters, with the empty
/// word as two-sided unit.
///
/// Memoised over prefix pairs: entry `(i, j)` holds `{u₁…u_i}{v₁…v_j}`.
pub fn shuffle_words_recursive(u: &TensorWord, v: &TensorWord) -> TensorElement {
    let (p, q) = (u.rank(), v.rank());
    let (ul, vl) = (u.letters(), v.letters());
    let mut table: Vec<Vec<TensorElement>> = vec![vec![TensorElement::zero(); q + 1]; p + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[0] = TensorElement::word(ul[..i].to_vec());
    }
    for j in 0..=q {
        table[0][j] = TensorElement::word(vl[..j].to_vec());
    }
    for i in 1..=p {
        for j in 1..=q {
            let a = table[i - 1][j].tensor_append_symbol(ul[i - 1]);
            let b = table[i][j - 1].tensor_append_symbol(vl[j - 1]);
            let stuck = ito_mul(ul[i - 1], vl[j - 1]);
            let c = if stuck.is_zero() {
                TensorElement::zero()
            } else {
                table[i - 1][j - 1].tensor_append(&stuck)
            };
            table[i][j] = a.add(&b).add(&c);
        }
    }
    table.pop().and_then(|mut r| r.pop()).unwrap_or_default()
}

/// Word product by direct summation over ordered pairs `(A, B)` with
/// `A ∪ B = {1,…,N}`, `|A| = |u|`, `|B| = |v|`; doubly occupied slots are
/// reduced with the Itô table.
pub fn shuffle_words_subsets(u: &TensorWord, v: &TensorWord) -> TensorElement {
    shuffle_words_subsets_counted(u, v).0
}

/// Like [`shuffle_words_subsets`], also returning, for each result rank `N`
/// from `max(|u|,|v|)` to `|u|+|v|`, how many of the `3^N` slot labellings
/// had the right sizes and were therefore summed.
pub fn shuffle_words_subsets_counted(u: &TensorWord, v: &TensorWord) -> (TensorElement, Vec<(usize, u64)>) {
    let (p, q) = (u.rank(), v.rank());
    let mut out = TensorElement::zero();
    let mut counts = Vec::new();
    for n in p.max(q)..=p + q {
        let mut scanned = 0u64;
        // labels: 0 = A only, 1 = B only, 2 = A ∩ B
        let mut labels = vec![0u8; n];
        let total = 3u64.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            for l in labels.iter_mut() {
                *l = (c % 3) as u8;
                c /= 3;
            }
            let in_a = labels.iter().filter(|&&l| l != 1).count();
            let in_b = labels.iter().filter(|&&l| l != 0).count();
            if in_a != p || in_b != q {
                continue;
            }
            scanned += 1;
            let (mut i, mut j) = (0, 0);
            let mut word = TensorElement::one();
            for &l in &labels {
                let slot = match l {
                    0 => {
                        i += 1;
                        ItoElement::basis(u.letters()[i - 1])
                    }
                    1 => {
                        j += 1;
                        ItoElement::basis(v.letters()[j - 1])
                    }
                    _ => {
                        i += 1;
                        j += 1;
                        ito_mul(u.letters()[i - 1], v.letters()[j - 1])
                    }
                };
                word = word.tensor_append(&slot);
                if word.is_zero() {
                    break;
                }
            }
            out = out.add(&word);
        }
        counts.push((n, scanned));
    }
    (out, counts)
}

/// Multiplicities of every word in `{u}{v}` with rank at most `cap`.
fn merge_words(u: &[ItoSymbol], v: &[ItoSymbol], cap: usize, table: &ItoTable, out: &mut BTreeMap<TensorWord, i64>) {
    fn walk(
        u: &[ItoSymbol],
        v: &[ItoSymbol],
        cap: usize,
        table: &ItoTable,
        buf: &mut Vec<ItoSymbol>,
        out: &mut BTreeMap<TensorWord, i64>,
    ) {
        if buf.len() + u.len().max(v.len()) > cap {
            return;
        }
        match (u.split_first(), v.split_first()) {
            (None, None) => *out.entry(TensorWord::new(buf.clone())).or_insert(0) += 1,
            (Some(_), None) | (None, Some(_)) => {
                let rest = if u.is_empty() { v } else { u };
                let len = buf.len();
                buf.extend_from_slice(rest);
                *out.entry(TensorWord::new(buf.clone())).or_insert(0) += 1;
                buf.truncate(len);
            }
            (Some((&x, ut)), Some((&y, vt))) => {
                buf.push(x);
                walk(ut, v, cap, table, buf, out);
                buf.pop();
                buf.push(y);
                walk(u, vt, cap, table, buf, out);
                buf.pop();
                if let Some(s) = table.mul(x, y) {
                    buf.push(s);
                    walk(ut, vt, cap, table, buf, out);
                    buf.pop();
                }
            }
        }
    }
    let mut buf = Vec::with_capacity(u.len() + v.len());
    walk(u, v, cap, table, &mut buf, out);
}

/// Sticky shuffle product of two elements.
pub fn product(a: &TensorElement, b: &TensorElement) -> TensorElement {
    product_capped(a, b, None)
}

/// Sticky shuffle product keeping only result terms of rank `≤ max_rank`.
///
/// The rank of every term of `{u}{v}` is at least `max(|u|, |v|)`, so pairs
/// already above the cap are skipped outright.
pub fn product_capped(a: &TensorElement, b: &TensorElement, max_rank: Option<usize>) -> TensorElement {
    product_with_table(a, b, max_rank, &ItoTable::PLANAR)
}

/// [`product_capped`] over an arbitrary Itô table.
pub fn product_with_table(
    a: &TensorElement,
    b: &TensorElement,
    max_rank: Option<usize>,
    table: &ItoTable,
) -> TensorElement {
    let cap = max_rank.unwrap_or(usize::MAX);
    let mut out = Terms::default();
    let mut counts = BTreeMap::new();
    for (wa, ca) in a.iter() {
        if wa.rank() > cap {
            continue;
        }
        for (wb, cb) in b.iter() {
            if wb.rank() > cap {
                continue;
            }
            counts.clear();
            merge_words(wa.letters(), wb.letters(), cap, table, &mut counts);
            let cab = ca * cb;
            for (w, m) in core::mem::take(&mut counts) {
                out.add_term(w, &cab * Scalar::from_integer(m.into()));
            }
        }
    }
    TensorElement { terms: out }
}

/// `a^n` under the sticky shuffle product, optionally truncated to ranks `≤ max_rank`
/// after every multiplication.
pub fn power(a: &TensorElement, n: usize, max_rank: Option<usize>) -> TensorElement {
    let mut acc = TensorElement::one();
    for _ in 0..n {
        acc = product_capped(&acc, a, max_rank);
    }
    acc
}
