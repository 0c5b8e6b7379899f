use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError};

/// Order used inside one block of a block order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockOrder {
    Lex,
    Grevlex,
}

/// A monomial order on exponent vectors. Variable index 0 is the largest
/// variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Elimination order: variables `0..split` form the head block and are
    /// compared first with `head`; ties fall through to `tail` on the rest.
    Block {
        split: usize,
        head: BlockOrder,
        tail: BlockOrder,
    },
}

fn lex(u: &[u32], v: &[u32]) -> Ordering {
    u.cmp(v)
}

fn grevlex(u: &[u32], v: &[u32]) -> Ordering {
    let du: u64 = u.iter().map(|&e| u64::from(e)).sum();
    let dv: u64 = v.iter().map(|&e| u64::from(e)).sum();
    du.cmp(&dv).then_with(|| {
        u.iter()
            .zip(v)
            .rev()
            .find(|(a, b)| a != b)
            .map_or(Ordering::Equal, |(a, b)| b.cmp(a))
    })
}

impl BlockOrder {
    fn cmp(self, u: &[u32], v: &[u32]) -> Ordering {
        match self {
            BlockOrder::Lex => lex(u, v),
            BlockOrder::Grevlex => grevlex(u, v),
        }
    }
}

impl MonomialOrder {
    /// Block order that eliminates the first `split` variables with lex in
    /// both blocks. Coincides with plain lex.
    pub fn block_lex(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            head: BlockOrder::Lex,
            tail: BlockOrder::Lex,
        }
    }

    pub fn block_grevlex(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            head: BlockOrder::Grevlex,
            tail: BlockOrder::Grevlex,
        }
    }

    /// Compares raw exponent slices. Callers guarantee equal lengths.
    pub fn cmp(&self, u: &[u32], v: &[u32]) -> Ordering {
        debug_assert_eq!(u.len(), v.len());
        match *self {
            MonomialOrder::Lex => lex(u, v),
            MonomialOrder::Grevlex => grevlex(u, v),
            MonomialOrder::Block { split, head, tail } => {
                let s = split.min(u.len());
                head.cmp(&u[..s], &v[..s])
                    .then_with(|| tail.cmp(&u[s..], &v[s..]))
            }
        }
    }

    pub fn cmp_mono(&self, u: &Monomial, v: &Monomial) -> Ordering {
        self.cmp(u.exponents(), v.exponents())
    }

    /// Checks that the order is meaningful for `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<(), PolyError> {
        match *self {
            MonomialOrder::Block { split, .. } if split > nvars => Err(PolyError::InvalidOrder(
                format!("block split {split} exceeds {nvars} variables"),
            )),
            _ => Ok(()),
        }
    }

    /// Whether every monomial involving one of the first `k` variables is
    /// larger than every monomial free of them.
    pub fn eliminates_prefix(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        match *self {
            MonomialOrder::Lex => true,
            MonomialOrder::Grevlex => false,
            MonomialOrder::Block { split, head, .. } => {
                split == k || (split > k && head == BlockOrder::Lex)
            }
        }
    }
}

/// Three-way comparison of two exponent vectors under `ord`.
pub fn cmp_monomials(
    u: &Monomial,
    v: &Monomial,
    ord: &MonomialOrder,
) -> Result<Ordering, PolyError> {
    if u.len() != v.len() {
        return Err(PolyError::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(ord.cmp_mono(u, v))
}
