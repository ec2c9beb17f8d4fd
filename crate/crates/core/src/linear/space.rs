use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Basis label: an atom or a tuple of labels (tensor factors).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Atom(String),
    Tuple(Vec<Label>),
}

impl Label {
    pub fn pair(a: &Label, b: &Label) -> Label {
        Label::Tuple(vec![a.clone(), b.clone()])
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => f.write_str(s),
            Label::Tuple(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Atom(s.to_string())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Atom(s)
    }
}

struct Inner {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

/// A vector space with an ordered, labeled basis. Cheap to clone.
#[derive(Clone)]
pub struct BasedSpace(Arc<Inner>);

impl BasedSpace {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate basis label {l}")));
            }
        }
        Ok(BasedSpace(Arc::new(Inner { labels, index })))
    }

    pub fn from_strings<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(labels.into_iter().map(|s| Label::Atom(s.into())).collect())
    }

    /// The one-dimensional space 𝕜 with basis label `1`.
    pub fn field() -> Self {
        Self::new(vec![Label::from("1")]).expect("single label")
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.0.labels[i]
    }

    pub fn labels(&self) -> &[Label] {
        &self.0.labels
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn position_str(&self, label: &str) -> Option<usize> {
        self.position(&Label::from(label))
            .or_else(|| self.0.labels.iter().position(|l| l.to_string() == label))
    }

    /// Index of `(i, j)` in `self ⊗ other`.
    pub fn pair_index(&self, other: &BasedSpace, i: usize, j: usize) -> usize {
        i * other.dim() + j
    }
}

impl PartialEq for BasedSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for BasedSpace {}

impl fmt::Debug for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.labels.iter()).finish()
    }
}

/// `U ⊗ V` with labels `(u_i, v_j)` in lexicographic order of `(i, j)`.
pub fn tensor(u: &BasedSpace, v: &BasedSpace) -> BasedSpace {
    let mut labels = Vec::with_capacity(u.dim() * v.dim());
    for a in u.labels() {
        for b in v.labels() {
            labels.push(Label::pair(a, b));
        }
    }
    BasedSpace::new(labels).expect("pairs of distinct labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_dimension_and_order() {
        let u = BasedSpace::from_strings(["a", "b"]).unwrap();
        let v = BasedSpace::from_strings(["x", "y", "z"]).unwrap();
        let w = tensor(&u, &v);
        assert_eq!(w.dim(), 6);
        assert_eq!(w.label(4).to_string(), "(b,y)");
        assert_eq!(w.label(u.pair_index(&v, 1, 1)).to_string(), "(b,y)");
    }

    #[test]
    fn duplicates_rejected() {
        assert!(BasedSpace::from_strings(["a", "a"]).is_err());
    }
}
