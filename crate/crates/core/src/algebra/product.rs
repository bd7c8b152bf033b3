use super::{Algebra, Morphism, MorphismKind, Table};
use crate::error::{Error, Result};
use crate::par::Strategy;

/// A direct product with its coordinate bookkeeping.
///
/// Elements are tuples in mixed radix, first factor most significant, so the
/// carrier order is lexicographic in the coordinates.
#[derive(Clone, Debug)]
pub struct Product<A> {
    pub algebra: A,
    pub factor_sizes: Vec<usize>,
    /// Projection onto each factor.
    pub projections: Vec<Morphism>,
}

impl<A: Algebra> Product<A> {
    pub fn coords(&self, x: usize) -> Vec<usize> {
        coords_of(&self.factor_sizes, x)
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        index_of(&self.factor_sizes, coords)
    }
}

pub(crate) fn coords_of(sizes: &[usize], mut x: usize) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &s) in out.iter_mut().zip(sizes).rev() {
        *slot = x % s;
        x /= s;
    }
    out
}

pub(crate) fn index_of(sizes: &[usize], coords: &[usize]) -> usize {
    coords.iter().zip(sizes).fold(0, |acc, (&c, &s)| acc * s + c)
}

/// Componentwise product of `factors`. Fails above `cap` elements.
pub fn direct_product<A: Algebra>(factors: &[A], cap: usize) -> Result<Product<A>> {
    direct_product_with(factors, cap, Strategy::default())
}

pub fn direct_product_with<A: Algebra>(
    factors: &[A],
    cap: usize,
    strategy: Strategy,
) -> Result<Product<A>> {
    if factors.is_empty() {
        return Err(Error::InvalidSize { kind: "direct product".into(), size: 0 });
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let size = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&p| p <= cap))
        .ok_or(Error::ProductTooLarge {
            size: sizes.iter().fold(1usize, |a, &s| a.saturating_mul(s)),
            cap,
        })?;
    let all_coords: Vec<Vec<usize>> = (0..size).map(|x| coords_of(&sizes, x)).collect();
    let labels = all_coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(factors).map(|(&i, f)| f.label(i)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let factor_tables: Vec<Vec<&Table>> = factors.iter().map(|f| f.tables()).collect();
    let ops = factor_tables[0].len();
    let tables = (0..ops)
        .map(|op| {
            Table::from_fn(size, |x, y| {
                let (cx, cy) = (&all_coords[x], &all_coords[y]);
                let r: Vec<usize> = (0..sizes.len())
                    .map(|i| factor_tables[i][op].get(cx[i], cy[i]))
                    .collect();
                index_of(&sizes, &r)
            })
        })
        .collect();
    let algebra = A::from_tables(labels, tables, strategy)?;
    let projections = (0..factors.len())
        .map(|i| Morphism {
            map: all_coords.iter().map(|c| c[i]).collect(),
            target_size: sizes[i],
            kind: MorphismKind::of::<A>(),
        })
        .collect();
    Ok(Product { algebra, factor_sizes: sizes, projections })
}
