use std::collections::{BTreeMap, HashMap};

use super::{check_morphism, Algebra, Morphism, MorphismKind, Table};
use crate::error::{Error, Result};
use crate::par::Strategy;

/// A finite directed system `(A_i, φ_ij)`.
#[derive(Clone, Debug)]
pub struct InductiveSystem<A> {
    /// `leq[i][j]` is the index order.
    leq: Vec<Vec<bool>>,
    objects: Vec<A>,
    transitions: BTreeMap<(usize, usize), Morphism>,
}

impl<A: Algebra> InductiveSystem<A> {
    /// Validates the index poset, directedness, the transition morphisms,
    /// `φ_ii = id` and `φ_jk ∘ φ_ij = φ_ik`.
    pub fn new(
        leq: Vec<Vec<bool>>,
        objects: Vec<A>,
        transitions: BTreeMap<(usize, usize), Morphism>,
    ) -> Result<Self> {
        let m = objects.len();
        let bad = |msg: String| Err(Error::InvalidSystem(msg));
        if m == 0 || leq.len() != m || leq.iter().any(|r| r.len() != m) {
            return bad("index order must be a square matrix over the objects".into());
        }
        for i in 0..m {
            if !leq[i][i] {
                return bad(format!("index order is not reflexive at {i}"));
            }
            for j in 0..m {
                if i != j && leq[i][j] && leq[j][i] {
                    return bad(format!("index order is not antisymmetric at ({i},{j})"));
                }
                for k in 0..m {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return bad(format!("index order is not transitive at ({i},{j},{k})"));
                    }
                }
                if !(0..m).any(|k| leq[i][k] && leq[j][k]) {
                    return Err(Error::NotDirected(format!("{i} and {j} have no upper bound")));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                if !leq[i][j] {
                    continue;
                }
                let Some(t) = transitions.get(&(i, j)) else {
                    return bad(format!("missing transition {i} -> {j}"));
                };
                if t.target_size != objects[j].size() {
                    return bad(format!("transition {i} -> {j} has the wrong target"));
                }
                if let Err(e) = check_morphism(&objects[i], &objects[j], &t.map) {
                    return bad(format!("transition {i} -> {j}: {e}"));
                }
                if i == j && t.map.iter().enumerate().any(|(x, &y)| x != y) {
                    return bad(format!("transition {i} -> {i} is not the identity"));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if leq[i][j] && leq[j][k] && transitions[&(i, j)].then(&transitions[&(j, k)]).map != transitions[&(i, k)].map {
                        return bad(format!("transitions do not compose along {i} <= {j} <= {k}"));
                    }
                }
            }
        }
        Ok(InductiveSystem { leq, objects, transitions })
    }

    /// One-object system.
    pub fn single(obj: A) -> Self {
        let mut t = BTreeMap::new();
        t.insert((0, 0), Morphism::identity(&obj));
        InductiveSystem { leq: vec![vec![true]], objects: vec![obj], transitions: t }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[A] {
        &self.objects
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn transition(&self, i: usize, j: usize) -> Option<&Morphism> {
        self.transitions.get(&(i, j))
    }

    pub fn transitions(&self) -> &BTreeMap<(usize, usize), Morphism> {
        &self.transitions
    }

    /// The greatest index; a finite directed poset always has one.
    pub fn maximum(&self) -> usize {
        let m = self.len();
        (0..m)
            .find(|&k| (0..m).all(|i| self.leq[i][k]))
            .expect("finite directed posets have a maximum")
    }

    fn upper_bounds(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&k| self.leq[i][k] && self.leq[j][k])
    }

    /// Applies `f` to every object and transition (same index order).
    pub fn map_objects<B: Algebra>(
        &self,
        mut f: impl FnMut(&A) -> Result<B>,
        mut g: impl FnMut(usize, usize, &Morphism) -> Result<Morphism>,
    ) -> Result<InductiveSystem<B>> {
        let objects = self.objects.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        let transitions = self
            .transitions
            .iter()
            .map(|(&(i, j), t)| Ok(((i, j), g(i, j, t)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        InductiveSystem::new(self.leq.clone(), objects, transitions)
    }
}

/// The colimit of a finite directed system, built as the quotient of the
/// disjoint union.
#[derive(Clone, Debug)]
pub struct InductiveLimit<A> {
    pub algebra: A,
    /// Canonical maps `φ_i : A_i → lim`.
    pub canonical: Vec<Morphism>,
    pub maximum: usize,
    /// The isomorphism `lim → A_max`, inverse of `φ_max`.
    pub to_maximum: Morphism,
}

/// Builds `(∐ A_i)/~` where `a ~ b` iff `φ_ik(a) = φ_jk(b)` for some common
/// upper bound `k`, with operations computed at an upper bound.
///
/// Well-definedness over every upper bound, antisymmetry of the induced order
/// and its agreement with the lattice order are all checked, as are the
/// cocone equations and that `φ_max` is an isomorphism.
pub fn inductive_limit<A: Algebra>(sys: &InductiveSystem<A>, cap: usize) -> Result<InductiveLimit<A>> {
    let m = sys.len();
    let offsets: Vec<usize> = sys
        .objects
        .iter()
        .scan(0, |acc, o| {
            let here = *acc;
            *acc += o.size();
            Some(here)
        })
        .collect();
    let total: usize = sys.objects.iter().map(|o| o.size()).sum();
    if total > cap {
        return Err(Error::CapExceeded { what: "disjoint union".into(), size: total, cap });
    }
    let elem = |g: usize| -> (usize, usize) {
        let i = offsets.iter().rposition(|&o| o <= g).unwrap();
        (i, g - offsets[i])
    };

    // Buckets (k, z): all (i, a) with i ≤ k and φ_ik(a) = z are ~-related.
    let mut uf: Vec<usize> = (0..total).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let next = uf[y];
            uf[y] = r;
            y = next;
        }
        r
    }
    let mut buckets_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    for k in 0..m {
        let mut first: HashMap<usize, usize> = HashMap::new();
        for i in (0..m).filter(|&i| sys.leq[i][k]) {
            let t = &sys.transitions[&(i, k)];
            for a in 0..sys.objects[i].size() {
                let g = offsets[i] + a;
                let z = t.map[a];
                buckets_of[g].push((k, z));
                match first.get(&z) {
                    Some(&h) => {
                        let (ra, rb) = (find(&mut uf, g), find(&mut uf, h));
                        uf[ra] = rb;
                    }
                    None => {
                        first.insert(z, g);
                    }
                }
            }
        }
    }
    let roots: Vec<usize> = (0..total).map(|g| find(&mut uf, g)).collect();
    // Classes ordered by their first member in the disjoint union.
    let mut class_of = vec![usize::MAX; total];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut root_class: HashMap<usize, usize> = HashMap::new();
    for g in 0..total {
        let c = *root_class.entry(roots[g]).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        class_of[g] = c;
        members[c].push(g);
    }
    // ~ must already be transitive: members of a class share a bucket pairwise.
    for ms in &members {
        for (p, &x) in ms.iter().enumerate() {
            for &y in &ms[p + 1..] {
                if !buckets_of[x].iter().any(|b| buckets_of[y].contains(b)) {
                    let ((i, a), (j, b)) = (elem(x), elem(y));
                    return Err(Error::InvalidSystem(format!(
                        "relation is not transitive: ({i},{a}) and ({j},{b}) are only linked through a chain"
                    )));
                }
            }
        }
    }
    let size = members.len();
    let reps: Vec<(usize, usize)> = members.iter().map(|ms| elem(ms[0])).collect();
    let tables_at: Vec<Vec<&Table>> = sys.objects.iter().map(|o| o.tables()).collect();
    let ops = tables_at[0].len();
    let mut cells = vec![vec![0usize; size * size]; ops];
    for x in 0..size {
        for y in 0..size {
            let ((i, a), (j, b)) = (reps[x], reps[y]);
            for op in 0..ops {
                let mut value = None;
                for k in sys.upper_bounds(i, j) {
                    let (ak, bk) = (sys.transitions[&(i, k)].map[a], sys.transitions[&(j, k)].map[b]);
                    let r = class_of[offsets[k] + tables_at[k][op].get(ak, bk)];
                    match value {
                        None => value = Some(r),
                        Some(v) if v != r => {
                            return Err(Error::CongruenceFailure(format!(
                                "{} on the limit depends on the chosen upper bound",
                                A::table_names()[op]
                            )))
                        }
                        _ => {}
                    }
                }
                cells[op][x * size + y] = value.expect("directed");
            }
        }
    }
    // [a] ≤ [b] iff φ_ik(a) ≤ φ_jk(b) for some upper bound k.
    let order = |x: usize, y: usize| {
        let ((i, a), (j, b)) = (reps[x], reps[y]);
        sys.upper_bounds(i, j).any(|k| {
            sys.objects[k].leq(sys.transitions[&(i, k)].map[a], sys.transitions[&(j, k)].map[b])
        })
    };
    let max = sys.maximum();
    let labels: Vec<String> = members
        .iter()
        .map(|ms| {
            ms.iter()
                .map(|&g| elem(g))
                .find(|&(i, _)| i == max)
                .map(|(i, a)| sys.objects[i].label(a).to_string())
                .unwrap_or_else(|| {
                    let (i, a) = elem(ms[0]);
                    format!("[{i}:{}]", sys.objects[i].label(a))
                })
        })
        .collect();
    let tables: Vec<Table> = cells
        .iter()
        .map(|c| Table::from_fn(size, |x, y| c[x * size + y]))
        .collect();
    let algebra = A::from_tables(labels, tables, Strategy::default())?;
    for x in 0..size {
        for y in 0..size {
            let o = order(x, y);
            if o && x != y && order(y, x) {
                return Err(Error::CongruenceFailure("limit order is not antisymmetric".into()));
            }
            if o != algebra.leq(x, y) {
                return Err(Error::OrderInconsistency {
                    a: algebra.label(x).into(),
                    b: algebra.label(y).into(),
                });
            }
        }
    }
    let canonical: Vec<Morphism> = (0..m)
        .map(|i| Morphism {
            map: (0..sys.objects[i].size()).map(|a| class_of[offsets[i] + a]).collect(),
            target_size: size,
            kind: MorphismKind::of::<A>(),
        })
        .collect();
    for (i, phi) in canonical.iter().enumerate() {
        check_morphism(&sys.objects[i], &algebra, &phi.map)
            .map_err(|e| Error::NotAMorphism(format!("canonical map {i}: {e}")))?;
        for (j, phi_j) in canonical.iter().enumerate() {
            if sys.leq[i][j] && sys.transitions[&(i, j)].then(phi_j).map != phi.map {
                return Err(Error::InvalidSystem(format!("cocone fails along {i} <= {j}")));
            }
        }
    }
    let to_maximum = canonical[max]
        .inverse()
        .ok_or_else(|| Error::InvalidSystem("canonical map of the maximum is not bijective".into()))?;
    Ok(InductiveLimit { algebra, canonical, maximum: max, to_maximum })
}
