use super::{ResiduatedLattice, Table};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Chain,
    Boolean,
}

pub fn generate_standard(kind: StandardKind, n: usize) -> Result<ResiduatedLattice> {
    match kind {
        StandardKind::Chain => chain(n),
        StandardKind::Boolean => boolean(n),
    }
}

/// The `n`-element Gödel chain: `⊙ = ∧`, `a → b = 1` if `a ≤ b` else `b`.
///
/// Labels are `0, c1, …, c(n-2), 1`; the one-element chain is labelled `1`.
pub fn chain(n: usize) -> Result<ResiduatedLattice> {
    if n == 0 {
        return Err(Error::InvalidSize { kind: "chain".into(), size: n });
    }
    let top = n - 1;
    let labels = (0..n)
        .map(|i| match i {
            _ if i == top => "1".to_string(),
            0 => "0".to_string(),
            _ => format!("c{i}"),
        })
        .collect();
    ResiduatedLattice::new(
        labels,
        Table::from_fn(n, |a, b| a.max(b)),
        Table::from_fn(n, |a, b| a.min(b)),
        Table::from_fn(n, |a, b| a.min(b)),
        Table::from_fn(n, |a, b| if a <= b { top } else { b }),
    )
}

/// The Boolean algebra of subsets of a `log2(n)`-element set, indexed by bitmask.
///
/// `⊙ = ∧` and `a → b = ¬a ∨ b`. Atoms are named `a, b, c, …`; other
/// elements are the concatenation of the atoms below them.
pub fn boolean(n: usize) -> Result<ResiduatedLattice> {
    if n == 0 || !n.is_power_of_two() || n > 1 << 12 {
        return Err(Error::InvalidSize { kind: "boolean".into(), size: n });
    }
    let top = n - 1;
    let bits = n.trailing_zeros() as usize;
    let labels = (0..n)
        .map(|m| {
            if m == top {
                "1".to_string()
            } else if m == 0 {
                "0".to_string()
            } else {
                (0..bits)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| char::from(b'a' + i as u8))
                    .collect()
            }
        })
        .collect();
    ResiduatedLattice::new(
        labels,
        Table::from_fn(n, |a, b| a | b),
        Table::from_fn(n, |a, b| a & b),
        Table::from_fn(n, |a, b| a & b),
        Table::from_fn(n, |a, b| (!a & top) | b),
    )
}
