use super::{Algebra, Kind};
use crate::error::{Error, Result};

/// Which signature a morphism is declared to preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismKind {
    Residuated,
    BoundedLattice,
    /// A bounded-lattice morphism between Boolean algebras; complements are
    /// preserved automatically.
    Boolean,
}

impl MorphismKind {
    pub fn of<A: Algebra>() -> MorphismKind {
        match A::KIND {
            Kind::Residuated => MorphismKind::Residuated,
            Kind::Lattice => MorphismKind::BoundedLattice,
        }
    }
}

/// A total index map between two finite algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub map: Vec<usize>,
    pub target_size: usize,
    pub kind: MorphismKind,
}

impl Morphism {
    /// Checks `map` against `src`/`tgt` and wraps it.
    pub fn new<A: Algebra>(src: &A, tgt: &A, map: Vec<usize>) -> Result<Morphism> {
        check_morphism(src, tgt, &map).map_err(Error::NotAMorphism)?;
        Ok(Morphism { map, target_size: tgt.size(), kind: MorphismKind::of::<A>() })
    }

    pub fn identity<A: Algebra>(alg: &A) -> Morphism {
        Morphism {
            map: (0..alg.size()).collect(),
            target_size: alg.size(),
            kind: MorphismKind::of::<A>(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn source_size(&self) -> usize {
        self.map.len()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism {
            map: self.map.iter().map(|&x| other.map[x]).collect(),
            target_size: other.target_size,
            kind: self.kind,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.map.len() == self.target_size && self.is_injective()
    }

    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target_size];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Morphism { map: inv, target_size: self.map.len(), kind: self.kind })
    }
}

/// Checks that `map` preserves every operation of the signature and the bounds.
///
/// Returns a description of the first violation.
pub fn check_morphism<A: Algebra>(src: &A, tgt: &A, map: &[usize]) -> Result<(), String> {
    let n = src.size();
    if map.len() != n {
        return Err(format!("map has {} entries for {n} elements", map.len()));
    }
    if let Some(&y) = map.iter().find(|&&y| y >= tgt.size()) {
        return Err(format!("image {y} out of range"));
    }
    if map[src.bottom()] != tgt.bottom() {
        return Err("bottom is not preserved".into());
    }
    if map[src.top()] != tgt.top() {
        return Err("top is not preserved".into());
    }
    for (name, (ts, tt)) in A::table_names().iter().zip(src.tables().into_iter().zip(tgt.tables())) {
        for a in 0..n {
            for b in 0..n {
                if map[ts.get(a, b)] != tt.get(map[a], map[b]) {
                    return Err(format!(
                        "{name} is not preserved at ({},{})",
                        src.label(a),
                        src.label(b)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// All morphisms `src → tgt`, in lexicographic order of their maps.
///
/// Backtracking assigns images in index order and checks every operation on
/// the already-assigned elements; `limit` bounds the number returned.
pub fn enumerate_morphisms<A: Algebra>(src: &A, tgt: &A, limit: usize) -> Vec<Morphism> {
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; src.size()];
    extend(src, tgt, &mut map, 0, limit, &mut out);
    out
}

fn consistent<A: Algebra>(src: &A, tgt: &A, map: &[usize], x: usize) -> bool {
    if x == src.bottom() && map[x] != tgt.bottom() || x == src.top() && map[x] != tgt.top() {
        return false;
    }
    let (st, tt) = (src.tables(), tgt.tables());
    (0..=x).all(|y| {
        st.iter().zip(&tt).all(|(s, t)| {
            [(x, y), (y, x)].iter().all(|&(a, b)| {
                let r = s.get(a, b);
                r > x || map[r] == t.get(map[a], map[b])
            })
        })
    })
}

fn extend<A: Algebra>(
    src: &A,
    tgt: &A,
    map: &mut Vec<usize>,
    x: usize,
    limit: usize,
    out: &mut Vec<Morphism>,
) {
    if out.len() >= limit {
        return;
    }
    if x == src.size() {
        // Results landing on not-yet-assigned indices were skipped above.
        if check_morphism(src, tgt, map).is_ok() {
            out.push(Morphism {
                map: map.clone(),
                target_size: tgt.size(),
                kind: MorphismKind::of::<A>(),
            });
        }
        return;
    }
    for y in 0..tgt.size() {
        map[x] = y;
        if consistent(src, tgt, map, x) {
            extend(src, tgt, map, x + 1, limit, out);
        }
    }
    map[x] = usize::MAX;
}
