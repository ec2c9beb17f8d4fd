//! Finite groupoids and their bisections.

use std::collections::HashMap;
use std::fmt;

use crate::group::FinGroup;
use crate::semigroup::FinSemigroup;
use crate::{Error, Result};

const MAX_BISECTIONS: usize = 10_000;

/// Arrows `g` with `src`, `tgt`; `g·h` is defined iff `src(g) = tgt(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroupoid {
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// `comp[g][h] = Some(g·h)` when composable.
    pub comp: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
    /// Unit arrow `i(x)` at each object.
    pub units: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.witness)
    }
}

impl FinGroupoid {
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.comp[g][h]
    }

    pub fn arrow(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a == label)
    }

    pub fn object(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|a| a == label)
    }

    pub fn is_unit(&self, g: usize) -> bool {
        self.units[self.src[g]] == g
    }

    /// One-object groupoid of a group.
    pub fn from_group(g: &FinGroup) -> Self {
        product_groupoid(&["*".to_string()], g)
    }
}

/// Checks every groupoid law; the witness names the failing arrows.
pub fn validate_groupoid(g: &FinGroupoid) -> std::result::Result<(), Violation> {
    let n = g.num_arrows();
    let m = g.num_objects();
    let fail = |law, witness: String| Err(Violation { law, witness });
    if g.src.len() != n || g.tgt.len() != n || g.inverse.len() != n || g.comp.len() != n || g.units.len() != m {
        return fail("shape", "array lengths disagree with arrow/object counts".into());
    }
    if g.src.iter().chain(&g.tgt).any(|&x| x >= m) || g.units.iter().chain(&g.inverse).any(|&a| a >= n) {
        return fail("shape", "index out of range".into());
    }
    for (x, &u) in g.units.iter().enumerate() {
        if g.src[u] != x || g.tgt[u] != x {
            return fail("unit", format!("i({}) = {} is not a loop at it", g.objects[x], g.arrows[u]));
        }
    }
    for a in 0..n {
        if g.comp[a].len() != n {
            return fail("shape", format!("composition row of {} has wrong length", g.arrows[a]));
        }
        for b in 0..n {
            let composable = g.src[a] == g.tgt[b];
            match g.comp[a][b] {
                Some(c) if !composable || c >= n => {
                    return fail("composition", format!("{}·{} defined but not composable", g.arrows[a], g.arrows[b]))
                }
                None if composable => {
                    return fail("composition", format!("{}·{} missing", g.arrows[a], g.arrows[b]))
                }
                Some(c) if g.src[c] != g.src[b] || g.tgt[c] != g.tgt[a] => {
                    return fail("composition", format!("{}·{} has wrong endpoints", g.arrows[a], g.arrows[b]))
                }
                _ => {}
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = g.comp[a][b] else { continue };
            for c in 0..n {
                let Some(bc) = g.comp[b][c] else { continue };
                if g.comp[ab][c] != g.comp[a][bc] {
                    return fail(
                        "associativity",
                        format!("({},{},{})", g.arrows[a], g.arrows[b], g.arrows[c]),
                    );
                }
            }
        }
    }
    for a in 0..n {
        if g.comp[a][g.units[g.src[a]]] != Some(a) || g.comp[g.units[g.tgt[a]]][a] != Some(a) {
            return fail("unit", format!("units do not fix {}", g.arrows[a]));
        }
        let inv = g.inverse[a];
        if g.comp[a][inv] != Some(g.units[g.tgt[a]]) || g.comp[inv][a] != Some(g.units[g.src[a]]) {
            return fail("inverse", format!("{} is not inverse to {}", g.arrows[inv], g.arrows[a]));
        }
    }
    Ok(())
}

/// `X × G × X` with `(x,g,y)·(y,h,z) = (x,gh,z)`, `src = y`, `tgt = x`.
/// For trivial `G` the arrows are labeled `(x,y)`.
pub fn product_groupoid(points: &[String], group: &FinGroup) -> FinGroupoid {
    let m = points.len();
    let k = group.order();
    let idx = |x: usize, g: usize, y: usize| (x * k + g) * m + y;
    let mut arrows = Vec::with_capacity(m * m * k);
    let (mut src, mut tgt) = (Vec::new(), Vec::new());
    for x in 0..m {
        for g in 0..k {
            for y in 0..m {
                arrows.push(if k == 1 {
                    format!("({},{})", points[x], points[y])
                } else {
                    format!("({},{},{})", points[x], group.label(g), points[y])
                });
                src.push(y);
                tgt.push(x);
            }
        }
    }
    let n = arrows.len();
    let decode = |a: usize| (a / (k * m), (a / m) % k, a % m);
    let comp = (0..n)
        .map(|a| {
            let (x, g, y) = decode(a);
            (0..n)
                .map(|b| {
                    let (y2, h, z) = decode(b);
                    (y == y2).then(|| idx(x, group.mul(g, h), z))
                })
                .collect()
        })
        .collect();
    let inverse = (0..n)
        .map(|a| {
            let (x, g, y) = decode(a);
            idx(y, group.inv(g), x)
        })
        .collect();
    let units = (0..m).map(|x| idx(x, group.unit(), x)).collect();
    FinGroupoid { objects: points.to_vec(), arrows, src, tgt, comp, inverse, units }
}

pub fn points(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn pair_groupoid(n: usize) -> FinGroupoid {
    product_groupoid(&points(n), &FinGroup::trivial())
}

/// Objects of `b` are primed.
pub fn disjoint_union(a: &FinGroupoid, b: &FinGroupoid) -> FinGroupoid {
    let (na, ma) = (a.num_arrows(), a.num_objects());
    let n = na + b.num_arrows();
    let objects = a.objects.iter().cloned().chain(b.objects.iter().map(|o| format!("{o}'"))).collect();
    let arrows = a.arrows.iter().cloned().chain(b.arrows.iter().map(|o| format!("{o}'"))).collect();
    let src = a.src.iter().copied().chain(b.src.iter().map(|x| x + ma)).collect();
    let tgt = a.tgt.iter().copied().chain(b.tgt.iter().map(|x| x + ma)).collect();
    let comp = (0..n)
        .map(|g| {
            (0..n)
                .map(|h| match (g < na, h < na) {
                    (true, true) => a.comp[g][h],
                    (false, false) => b.comp[g - na][h - na].map(|c| c + na),
                    _ => None,
                })
                .collect()
        })
        .collect();
    let inverse = a.inverse.iter().copied().chain(b.inverse.iter().map(|g| g + na)).collect();
    let units = a.units.iter().copied().chain(b.units.iter().map(|g| g + na)).collect();
    FinGroupoid { objects, arrows, src, tgt, comp, inverse, units }
}

/// Arrows with `src = tgt = x`, as a group.
pub fn isotropy_group(g: &FinGroupoid, x: usize) -> FinGroup {
    let loops: Vec<usize> = (0..g.num_arrows()).filter(|&a| g.src[a] == x && g.tgt[a] == x).collect();
    let pos: HashMap<usize, usize> = loops.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let table = loops
        .iter()
        .map(|&a| loops.iter().map(|&b| pos[&g.comp[a][b].expect("loops compose")]).collect())
        .collect();
    FinGroup::new(loops.iter().map(|&a| g.arrows[a].clone()).collect(), table).expect("isotropy is a group")
}

pub fn is_transitive(g: &FinGroupoid) -> bool {
    let m = g.num_objects();
    let mut reach = vec![vec![false; m]; m];
    for a in 0..g.num_arrows() {
        reach[g.src[a]][g.tgt[a]] = true;
    }
    reach.iter().all(|row| row.iter().all(|&r| r))
}

/// Local bisection `(u, X)`: `u(x)` has source `x`; `t∘u` injective.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Bisection {
    /// `(x, u(x))` sorted by `x`.
    assignment: Vec<(usize, usize)>,
}

impl Bisection {
    pub fn new(g: &FinGroupoid, mut assignment: Vec<(usize, usize)>) -> Result<Self> {
        assignment.sort_unstable();
        if assignment.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid("object assigned twice".into()));
        }
        let mut targets = Vec::new();
        for &(x, a) in &assignment {
            if x >= g.num_objects() || a >= g.num_arrows() {
                return Err(Error::Invalid("index out of range".into()));
            }
            if g.src[a] != x {
                return Err(Error::Invalid(format!("s({}) ≠ {}", g.arrows[a], g.objects[x])));
            }
            targets.push(g.tgt[a]);
        }
        targets.sort_unstable();
        if targets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("t∘u is not injective".into()));
        }
        Ok(Bisection { assignment })
    }

    /// `(i, X)`.
    pub fn identity_on(g: &FinGroupoid, domain: &[usize]) -> Self {
        let mut assignment: Vec<_> = domain.iter().map(|&x| (x, g.units[x])).collect();
        assignment.sort_unstable();
        Bisection { assignment }
    }

    pub fn identity(g: &FinGroupoid) -> Self {
        Self::identity_on(g, &(0..g.num_objects()).collect::<Vec<_>>())
    }

    pub fn assignment(&self) -> &[(usize, usize)] {
        &self.assignment
    }

    pub fn domain(&self) -> Vec<usize> {
        self.assignment.iter().map(|p| p.0).collect()
    }

    pub fn value(&self, x: usize) -> Option<usize> {
        self.assignment.binary_search_by_key(&x, |p| p.0).ok().map(|i| self.assignment[i].1)
    }

    /// `t∘u` as a partial map on objects.
    pub fn target_map(&self, g: &FinGroupoid) -> Vec<(usize, usize)> {
        self.assignment.iter().map(|&(x, a)| (x, g.tgt[a])).collect()
    }

    pub fn is_idempotent_form(&self, g: &FinGroupoid) -> bool {
        self.assignment.iter().all(|&(_, a)| g.is_unit(a))
    }

    pub fn is_global(&self, g: &FinGroupoid) -> bool {
        self.assignment.len() == g.num_objects()
    }

    pub fn label(&self, g: &FinGroupoid) -> String {
        let parts: Vec<String> =
            self.assignment.iter().map(|&(x, a)| format!("{}:{}", g.objects[x], g.arrows[a])).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `(uv)(y) = u(t(v(y)))·v(y)` on `{y : t(v(y)) ∈ Dom u}`.
pub fn bisection_compose(g: &FinGroupoid, u: &Bisection, v: &Bisection) -> Bisection {
    let assignment = v
        .assignment
        .iter()
        .filter_map(|&(y, b)| u.value(g.tgt[b]).map(|a| (y, g.comp[a][b].expect("composable by construction"))))
        .collect();
    Bisection { assignment }
}

/// `ū(t(u(x))) = u(x)⁻¹`.
pub fn bisection_star(g: &FinGroupoid, u: &Bisection) -> Bisection {
    let mut assignment: Vec<_> = u.assignment.iter().map(|&(_, a)| (g.tgt[a], g.inverse[a])).collect();
    assignment.sort_unstable();
    Bisection { assignment }
}

/// All bisections, ordered by domain size then assignment, with the
/// composition table.
pub fn enumerate_bisections(g: &FinGroupoid) -> Result<(Vec<Bisection>, FinSemigroup)> {
    let m = g.num_objects();
    let by_source: Vec<Vec<usize>> = (0..m).map(|x| (0..g.num_arrows()).filter(|&a| g.src[a] == x).collect()).collect();
    let mut out = Vec::new();
    let mut used = vec![false; m];
    let mut cur = Vec::new();
    fn walk(
        x: usize,
        g: &FinGroupoid,
        by_source: &[Vec<usize>],
        used: &mut [bool],
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Bisection>,
    ) -> Result<()> {
        if x == by_source.len() {
            if out.len() >= MAX_BISECTIONS {
                return Err(Error::SizeBound { what: "bisection count".into(), limit: MAX_BISECTIONS });
            }
            out.push(Bisection { assignment: cur.clone() });
            return Ok(());
        }
        walk(x + 1, g, by_source, used, cur, out)?;
        for &a in &by_source[x] {
            let t = g.tgt[a];
            if !used[t] {
                used[t] = true;
                cur.push((x, a));
                walk(x + 1, g, by_source, used, cur, out)?;
                cur.pop();
                used[t] = false;
            }
        }
        Ok(())
    }
    walk(0, g, &by_source, &mut used, &mut cur, &mut out)?;
    out.sort_by(|a, b| a.assignment.len().cmp(&b.assignment.len()).then_with(|| a.cmp(b)));
    let index: HashMap<&Bisection, usize> = out.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let table = out
        .iter()
        .map(|u| out.iter().map(|v| index[&bisection_compose(g, u, v)]).collect())
        .collect();
    let labels = out.iter().map(|b| b.label(g)).collect();
    let s = FinSemigroup::new(labels, table)?;
    Ok((out, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_validate() {
        assert!(validate_groupoid(&pair_groupoid(3)).is_ok());
        let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
        assert!(validate_groupoid(&g).is_ok());
        assert_eq!(g.num_arrows(), 8);
        assert!(is_transitive(&g));
        assert_eq!(isotropy_group(&g, 1).order(), 2);
        let one = FinGroupoid::from_group(&FinGroup::cyclic(3));
        assert_eq!(one.num_objects(), 1);
        assert!(validate_groupoid(&one).is_ok());
    }

    #[test]
    fn broken_inverse_is_named() {
        let mut g = pair_groupoid(2);
        let a = g.arrow("(1,2)").unwrap();
        g.inverse[a] = a;
        let v = validate_groupoid(&g).unwrap_err();
        assert_eq!(v.law, "inverse");
        assert!(v.witness.contains("(1,2)"));
    }

    #[test]
    fn disjoint_union_not_transitive() {
        let u = disjoint_union(&pair_groupoid(2), &pair_groupoid(2));
        assert!(validate_groupoid(&u).is_ok());
        assert!(!is_transitive(&u));
    }

    #[test]
    fn swap_squared_is_identity() {
        let g = pair_groupoid(2);
        let swap = Bisection::new(&g, vec![(0, g.arrow("(2,1)").unwrap()), (1, g.arrow("(1,2)").unwrap())]).unwrap();
        assert_eq!(bisection_compose(&g, &swap, &swap), Bisection::identity(&g));
        assert_eq!(bisection_star(&g, &swap), swap);
        let half = Bisection::new(&g, vec![(0, g.arrow("(2,1)").unwrap())]).unwrap();
        assert!(bisection_compose(&g, &half, &half).domain().is_empty());
        let star = bisection_star(&g, &half);
        assert_eq!(star.assignment(), &[(1, g.arrow("(1,2)").unwrap())]);
        let i1 = Bisection::identity_on(&g, &[0]);
        let i2 = Bisection::identity_on(&g, &[0, 1]);
        assert_eq!(bisection_compose(&g, &i1, &i2), i1);
    }

    #[test]
    fn invalid_bisections_rejected() {
        let g = pair_groupoid(2);
        let a = g.arrow("(1,2)").unwrap();
        assert!(Bisection::new(&g, vec![(0, a)]).is_err());
        let to1 = g.arrow("(1,1)").unwrap();
        let also_to1 = g.arrow("(1,2)").unwrap();
        assert!(Bisection::new(&g, vec![(0, to1), (1, also_to1)]).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_bisections(&pair_groupoid(2)).unwrap().0.len(), 7);
        assert_eq!(enumerate_bisections(&pair_groupoid(3)).unwrap().0.len(), 34);
        let g = product_groupoid(&points(2), &FinGroup::cyclic(2));
        assert_eq!(enumerate_bisections(&g).unwrap().0.len(), 17);
    }
}
