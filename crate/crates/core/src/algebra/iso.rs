use super::{Algebra, Morphism, MorphismKind};
use crate::error::{Error, Result};

/// Isomorphism-invariant signature of an element, used to prune the search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    rank: usize,
    corank: usize,
    down: usize,
    up: usize,
    /// Per operation: how often `op(a, x)` is `a`, the bottom, the top.
    op_counts: Vec<(usize, usize, usize)>,
    idempotent: bool,
}

pub fn fingerprint<A: Algebra>(alg: &A) -> Vec<Fingerprint> {
    let n = alg.size();
    let lt = |a: usize, b: usize| a != b && alg.leq(a, b);
    // Longest chain lengths from the bottom and to the top, by repeated relaxation.
    let mut rank = vec![0usize; n];
    let mut corank = vec![0usize; n];
    for _ in 0..n {
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) {
                    rank[b] = rank[b].max(rank[a] + 1);
                    corank[a] = corank[a].max(corank[b] + 1);
                }
            }
        }
    }
    let tables = alg.tables();
    (0..n)
        .map(|a| Fingerprint {
            rank: rank[a],
            corank: corank[a],
            down: (0..n).filter(|&x| alg.leq(x, a)).count(),
            up: (0..n).filter(|&x| alg.leq(a, x)).count(),
            op_counts: tables
                .iter()
                .map(|t| {
                    let row = (0..n).map(|x| t.get(a, x));
                    (
                        row.clone().filter(|&v| v == a).count(),
                        row.clone().filter(|&v| v == alg.bottom()).count(),
                        row.filter(|&v| v == alg.top()).count(),
                    )
                })
                .collect(),
            idempotent: alg.filter_op(a, a) == a,
        })
        .collect()
}

/// First isomorphism `a → b` in lexicographic order of the map, if any.
///
/// Uses the default search cap of 24 elements.
pub fn find_isomorphism<A: Algebra>(a: &A, b: &A) -> Result<Option<Morphism>> {
    find_isomorphism_with(a, b, 24)
}

pub fn find_isomorphism_with<A: Algebra>(a: &A, b: &A, cap: usize) -> Result<Option<Morphism>> {
    if a.size() > cap {
        return Err(Error::SearchCapExceeded { size: a.size(), cap });
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let (fa, fb) = (fingerprint(a), fingerprint(b));
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    let n = a.size();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| fa[x] == fb[y]).collect())
        .collect();
    let mut search = Search {
        a,
        b,
        candidates,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(search.run(0).then(|| Morphism {
        map: search.map.clone(),
        target_size: n,
        kind: MorphismKind::of::<A>(),
    }))
}

struct Search<'a, A> {
    a: &'a A,
    b: &'a A,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<A: Algebra> Search<'_, A> {
    fn run(&mut self, x: usize) -> bool {
        if x == self.a.size() {
            return true;
        }
        for i in 0..self.candidates[x].len() {
            let y = self.candidates[x][i];
            if self.used[y] {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.consistent(x) && self.run(x + 1) {
                return true;
            }
            self.used[y] = false;
        }
        self.map[x] = usize::MAX;
        false
    }

    /// Every table entry among assigned elements maps to the image's entry.
    fn consistent(&self, x: usize) -> bool {
        let (ta, tb) = (self.a.tables(), self.b.tables());
        let map = &self.map;
        (0..=x).all(|y| {
            ta.iter().zip(&tb).all(|(s, t)| {
                [(x, y), (y, x)].iter().all(|&(p, q)| {
                    let r = s.get(p, q);
                    let image = t.get(map[p], map[q]);
                    if r <= x {
                        map[r] == image
                    } else {
                        // r is unassigned: its image must still be free.
                        !self.used[image]
                    }
                })
            })
        })
    }
}
