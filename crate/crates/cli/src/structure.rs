//! The JSON structure format. One object per file with a `kind` discriminator;
//! scalars are strings, either `p/q` or decimal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use qisg_core::algebra::FinAlgebra;
use qisg_core::groupoid::{validate_groupoid, FinGroupoid};
use qisg_core::linear::{format_scalar, parse_scalar, tensor, BasedSpace, LinMap, Vector};
use qisg_core::qisg::Qisg;
use qisg_core::semigroup::FinSemigroup;

/// A basis combination keyed by label.
pub type Coeffs = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StructureFile {
    Semigroup {
        elements: Vec<String>,
        /// `table[a][b]` is the label of `ab`.
        table: Vec<Vec<String>>,
    },
    Groupoid {
        objects: Vec<String>,
        arrows: Vec<ArrowSpec>,
        /// `[g, h, g·h]` for every pair with `source(g) = target(h)`.
        compose: Vec<[String; 3]>,
    },
    Algebra {
        basis: Vec<String>,
        #[serde(default)]
        products: Vec<Product>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<Coeffs>,
    },
    Qisg {
        basis: Vec<String>,
        #[serde(default)]
        products: Vec<Product>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<Coeffs>,
        comult: Vec<Coproduct>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        counit: Option<Coeffs>,
        /// Missing entries are zero.
        antipode: BTreeMap<String, Coeffs>,
    },
    /// A reference into the built-in model registry.
    Algebroid {
        model: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        groupoid: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        q: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        window: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        index: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Product {
    pub left: String,
    pub right: String,
    pub value: Coeffs,
}

/// `Δ(of) = Σ c·(l ⊗ r)` as `[l, r, c]` triples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coproduct {
    pub of: String,
    pub value: Vec<[String; 3]>,
}

/// Registry parameters of an algebroid file, with defaults filled in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidRef {
    pub model: String,
    pub points: usize,
    pub group: String,
    pub groupoid: String,
    pub q: String,
    pub window: i64,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub enum Structure {
    Semigroup(FinSemigroup),
    Groupoid(FinGroupoid),
    Algebra(FinAlgebra),
    Qisg(Qisg),
    Algebroid(AlgebroidRef),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Semigroup(_) => "semigroup",
            Structure::Groupoid(_) => "groupoid",
            Structure::Algebra(_) => "algebra",
            Structure::Qisg(_) => "qisg",
            Structure::Algebroid(_) => "algebroid",
        }
    }
}

/// Where the file went wrong: a JSON position or a field path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub at: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.at, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(at: impl Into<String>, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { at: at.into(), message: message.into() })
}

pub fn parse_structure(text: &str) -> Result<Structure, ParseError> {
    let file: StructureFile = serde_json::from_str(text)
        .map_err(|e| ParseError { at: format!("line {}, column {}", e.line(), e.column()), message: e.to_string() })?;
    build(&file)
}

fn index_of(names: &[String], what: &str) -> Result<HashMap<String, usize>, ParseError> {
    let mut out = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.clone(), i).is_some() {
            return err(format!("{what}[{i}]"), format!("duplicate name {n:?}"));
        }
    }
    if out.is_empty() {
        return err(what, "must be nonempty");
    }
    Ok(out)
}

fn lookup(ix: &HashMap<String, usize>, name: &str, at: String) -> Result<usize, ParseError> {
    match ix.get(name) {
        Some(&i) => Ok(i),
        None => err(at, format!("unknown name {name:?}")),
    }
}

fn coeffs(ix: &HashMap<String, usize>, c: &Coeffs, at: &str) -> Result<Vector, ParseError> {
    let mut v = Vector::zero();
    for (k, s) in c {
        let i = lookup(ix, k, format!("{at}.{k}"))?;
        let q = parse_scalar(s).or_else(|e| err(format!("{at}.{k}"), e.to_string()))?;
        v.add_term(i, q);
    }
    Ok(v)
}

fn algebra(basis: &[String], products: &[Product], unit: &Option<Coeffs>) -> Result<FinAlgebra, ParseError> {
    let ix = index_of(basis, "basis")?;
    let n = basis.len();
    let mut table = vec![Vector::zero(); n * n];
    let mut seen = vec![false; n * n];
    for (p, prod) in products.iter().enumerate() {
        let at = format!("products[{p}]");
        let i = lookup(&ix, &prod.left, format!("{at}.left"))?;
        let j = lookup(&ix, &prod.right, format!("{at}.right"))?;
        if std::mem::replace(&mut seen[i * n + j], true) {
            return err(at, format!("product {}·{} given twice", prod.left, prod.right));
        }
        table[i * n + j] = coeffs(&ix, &prod.value, &format!("{at}.value"))?;
    }
    let unit = unit.as_ref().map(|u| coeffs(&ix, u, "unit")).transpose()?;
    let space = BasedSpace::from_strings(basis.iter().cloned()).or_else(|e| err("basis", e.to_string()))?;
    FinAlgebra::from_products(space, |i, j| table[i * n + j].clone(), unit).or_else(|e| err("products", e.to_string()))
}

pub fn build(file: &StructureFile) -> Result<Structure, ParseError> {
    match file {
        StructureFile::Semigroup { elements, table } => {
            let ix = index_of(elements, "elements")?;
            if table.len() != elements.len() {
                return err("table", format!("expected {} rows, found {}", elements.len(), table.len()));
            }
            let mut rows = Vec::with_capacity(table.len());
            for (a, row) in table.iter().enumerate() {
                if row.len() != elements.len() {
                    return err(format!("table[{a}]"), format!("expected {} entries, found {}", elements.len(), row.len()));
                }
                let r: Result<Vec<usize>, _> =
                    row.iter().enumerate().map(|(b, x)| lookup(&ix, x, format!("table[{a}][{b}]"))).collect();
                rows.push(r?);
            }
            FinSemigroup::new(elements.clone(), rows).map(Structure::Semigroup).or_else(|e| err("table", e.to_string()))
        }
        StructureFile::Groupoid { objects, arrows, compose } => {
            let ox = index_of(objects, "objects")?;
            let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
            let ax = index_of(&names, "arrows")?;
            let mut src = Vec::with_capacity(arrows.len());
            let mut tgt = Vec::with_capacity(arrows.len());
            for (i, a) in arrows.iter().enumerate() {
                src.push(lookup(&ox, &a.source, format!("arrows[{i}].source"))?);
                tgt.push(lookup(&ox, &a.target, format!("arrows[{i}].target"))?);
            }
            let n = arrows.len();
            let mut comp = vec![vec![None; n]; n];
            for (p, [g, h, gh]) in compose.iter().enumerate() {
                let at = format!("compose[{p}]");
                let (g, h, gh) = (
                    lookup(&ax, g, format!("{at}[0]"))?,
                    lookup(&ax, h, format!("{at}[1]"))?,
                    lookup(&ax, gh, format!("{at}[2]"))?,
                );
                if src[g] != tgt[h] {
                    return err(at, "source of the first arrow differs from the target of the second");
                }
                if comp[g][h].replace(gh).is_some() {
                    return err(at, "composite given twice");
                }
            }
            let mut units = Vec::with_capacity(objects.len());
            for (x, name) in objects.iter().enumerate() {
                let u = (0..n).find(|&u| {
                    src[u] == x && tgt[u] == x && (0..n).all(|a| tgt[a] != x || comp[u][a] == Some(a))
                });
                match u {
                    Some(u) => units.push(u),
                    None => return err("compose", format!("no identity arrow at {name:?}")),
                }
            }
            let mut inverse = Vec::with_capacity(n);
            for a in 0..n {
                match (0..n).find(|&b| comp[a][b] == Some(units[tgt[a]]) && comp[b][a] == Some(units[src[a]])) {
                    Some(b) => inverse.push(b),
                    None => return err("compose", format!("no inverse for {:?}", names[a])),
                }
            }
            let g = FinGroupoid { objects: objects.clone(), arrows: names, src, tgt, comp, inverse, units };
            validate_groupoid(&g).or_else(|v| err("compose", v.to_string()))?;
            Ok(Structure::Groupoid(g))
        }
        StructureFile::Algebra { basis, products, unit } => Ok(Structure::Algebra(algebra(basis, products, unit)?)),
        StructureFile::Qisg { basis, products, unit, comult, counit, antipode } => {
            let a = algebra(basis, products, unit)?;
            let ix = index_of(basis, "basis")?;
            let n = basis.len();
            let mut cols = vec![Vector::zero(); n];
            let mut seen = vec![false; n];
            for (p, c) in comult.iter().enumerate() {
                let at = format!("comult[{p}]");
                let j = lookup(&ix, &c.of, format!("{at}.of"))?;
                if std::mem::replace(&mut seen[j], true) {
                    return err(at, format!("Δ({}) given twice", c.of));
                }
                for (t, [l, r, s]) in c.value.iter().enumerate() {
                    let l = lookup(&ix, l, format!("{at}.value[{t}][0]"))?;
                    let r = lookup(&ix, r, format!("{at}.value[{t}][1]"))?;
                    let q = parse_scalar(s).or_else(|e| err(format!("{at}.value[{t}][2]"), e.to_string()))?;
                    cols[j].add_term(l * n + r, q);
                }
            }
            let sp = a.space().clone();
            let delta = LinMap::from_columns(sp.clone(), tensor(&sp, &sp), cols).or_else(|e| err("comult", e.to_string()))?;
            let counit = match counit {
                Some(c) => {
                    let v = coeffs(&ix, c, "counit")?;
                    let field = BasedSpace::field();
                    Some(LinMap::from_fn(&sp, &field, |j| Vector::term(0, v.coeff(&j))))
                }
                None => None,
            };
            let mut s_cols = vec![Vector::zero(); n];
            for (k, c) in antipode {
                let j = lookup(&ix, k, format!("antipode.{k}"))?;
                s_cols[j] = coeffs(&ix, c, &format!("antipode.{k}"))?;
            }
            let s = LinMap::from_columns(sp.clone(), sp, s_cols).or_else(|e| err("antipode", e.to_string()))?;
            Qisg::new(a, delta, counit, s).map(Structure::Qisg).or_else(|e| err("qisg", e.to_string()))
        }
        StructureFile::Algebroid { model, points, group, groupoid, q, window, index } => {
            let r = AlgebroidRef {
                model: model.clone(),
                points: points.unwrap_or(2),
                group: group.clone().unwrap_or_else(|| "Z2".into()),
                groupoid: groupoid.clone().unwrap_or_else(|| "product".into()),
                q: q.as_deref().map_or(Ok("1".to_string()), |s| {
                    parse_scalar(s).map(|v| format_scalar(&v)).or_else(|e| err("q", e.to_string()))
                })?,
                window: window.unwrap_or(qisg_core::algebroid::DEFAULT_WINDOW),
                index: index.unwrap_or(0),
            };
            crate::models::algebroid(&r).or_else(|e| err("model", e))?;
            Ok(Structure::Algebroid(r))
        }
    }
}

fn render_coeffs(space: &BasedSpace, v: &Vector) -> Coeffs {
    v.terms().map(|(&i, c)| (space.label(i).to_string(), format_scalar(c))).collect()
}

fn algebra_payload(a: &FinAlgebra) -> (Vec<String>, Vec<Product>, Option<Coeffs>) {
    let sp = a.space();
    let basis: Vec<String> = sp.labels().iter().map(|l| l.to_string()).collect();
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = a.product(i, j);
            if !v.is_zero() {
                products.push(Product { left: basis[i].clone(), right: basis[j].clone(), value: render_coeffs(sp, v) });
            }
        }
    }
    (basis, products, a.unit().map(|u| render_coeffs(sp, u)))
}

/// Canonical file for a validated structure: zero entries dropped, scalars
/// in lowest terms, entries in basis order.
pub fn to_file(s: &Structure) -> StructureFile {
    match s {
        Structure::Semigroup(sg) => StructureFile::Semigroup {
            elements: sg.labels().to_vec(),
            table: sg.table().iter().map(|row| row.iter().map(|&x| sg.label(x).to_string()).collect()).collect(),
        },
        Structure::Groupoid(g) => {
            let arrows = (0..g.num_arrows())
                .map(|a| ArrowSpec {
                    name: g.arrows[a].clone(),
                    source: g.objects[g.src[a]].clone(),
                    target: g.objects[g.tgt[a]].clone(),
                })
                .collect();
            let mut compose = Vec::new();
            for a in 0..g.num_arrows() {
                for b in 0..g.num_arrows() {
                    if let Some(c) = g.comp[a][b] {
                        compose.push([g.arrows[a].clone(), g.arrows[b].clone(), g.arrows[c].clone()]);
                    }
                }
            }
            StructureFile::Groupoid { objects: g.objects.clone(), arrows, compose }
        }
        Structure::Algebra(a) => {
            let (basis, products, unit) = algebra_payload(a);
            StructureFile::Algebra { basis, products, unit }
        }
        Structure::Qisg(q) => {
            let (basis, products, unit) = algebra_payload(q.algebra());
            let n = q.dim();
            let sp = q.space();
            let comult = (0..n)
                .filter(|&j| !q.comult().column(j).is_zero())
                .map(|j| Coproduct {
                    of: basis[j].clone(),
                    value: q
                        .comult()
                        .column(j)
                        .terms()
                        .map(|(&p, c)| [basis[p / n].clone(), basis[p % n].clone(), format_scalar(c)])
                        .collect(),
                })
                .collect();
            let counit = q.counit().map(|e| {
                (0..n)
                    .filter_map(|j| e.column(j).get(&0).map(|c| (basis[j].clone(), format_scalar(c))))
                    .collect()
            });
            let antipode = (0..n)
                .filter(|&j| !q.antipode().column(j).is_zero())
                .map(|j| (basis[j].clone(), render_coeffs(sp, q.antipode().column(j))))
                .collect();
            StructureFile::Qisg { basis, products, unit, comult, counit, antipode }
        }
        Structure::Algebroid(r) => StructureFile::Algebroid {
            model: r.model.clone(),
            points: Some(r.points),
            group: Some(r.group.clone()),
            groupoid: Some(r.groupoid.clone()),
            q: Some(r.q.clone()),
            window: Some(r.window),
            index: Some(r.index),
        },
    }
}

pub fn to_json(file: &StructureFile) -> String {
    serde_json::to_string_pretty(file).expect("structure files serialize")
}

/// `serialize(parse(text))`.
pub fn canonicalize(text: &str) -> Result<String, ParseError> {
    Ok(to_json(&to_file(&parse_structure(text)?)))
}
