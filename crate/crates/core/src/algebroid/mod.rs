//! Hopf algebroids over a commutative base.
//!
//! Two shapes are supported. In commutative mode `H` is commutative and a
//! single `(Δ, ε)` serves both sides. In restricted mode the base is
//! commutative but `H` need not be; the four structure maps collapse to two,
//! `s_l = t_r = t` and `s_r = t_l = s`, and both coproducts and counits are kept.
//!
//! Coproducts are stored as lifts into `H ⊗ H`. Identities that live in the
//! balanced tensor are compared modulo the balancing span.

mod check;
mod finite;
mod graded;

pub use check::{check_hopf_algebroid, Balancer};
pub use finite::{mutations, pair_algebroid, repfun_transitive_algebroid, weakhopf_algebroid, FinAlgebroid, Mutation};
pub use graded::{laurent_algebroid, quantum_torus, LaurentAlgebroid, QuantumTorus, DEFAULT_WINDOW};

use std::fmt::Debug;

use crate::linear::Comb;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Commutative,
    Restricted,
}

/// Which balanced tensor: `H ⊗_A H` of the left bialgebroid (`s(a)h ⊗ k ~ h ⊗ t(a)k`)
/// or of the right one (`h s(a) ⊗ k ~ h ⊗ k t(a)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub type Pair<K> = Comb<(K, K)>;

/// Structure maps on basis elements. Graded models answer for any key and
/// declare a finite window that the checks iterate over.
pub trait Algebroid {
    type Key: Ord + Clone + Debug;
    type Base: Ord + Clone + Debug;

    fn name(&self) -> String;
    fn mode(&self) -> Mode;
    /// Basis of `H`, or its window.
    fn basis(&self) -> Vec<Self::Key>;
    fn base_basis(&self) -> Vec<Self::Base>;
    fn in_window(&self, _k: &Self::Key) -> bool {
        true
    }
    fn key_label(&self, k: &Self::Key) -> String;
    fn base_label(&self, b: &Self::Base) -> String;

    fn mul(&self, x: &Self::Key, y: &Self::Key) -> Comb<Self::Key>;
    fn one(&self) -> Comb<Self::Key>;
    fn base_mul(&self, a: &Self::Base, b: &Self::Base) -> Comb<Self::Base>;
    fn base_one(&self) -> Comb<Self::Base>;

    fn source(&self, a: &Self::Base) -> Comb<Self::Key>;
    fn target(&self, a: &Self::Base) -> Comb<Self::Key>;
    fn delta_l(&self, h: &Self::Key) -> Pair<Self::Key>;
    fn delta_r(&self, h: &Self::Key) -> Pair<Self::Key> {
        self.delta_l(h)
    }
    fn eps_l(&self, h: &Self::Key) -> Comb<Self::Base>;
    fn eps_r(&self, h: &Self::Key) -> Comb<Self::Base> {
        self.eps_l(h)
    }
    fn antipode(&self, h: &Self::Key) -> Comb<Self::Key>;

    /// Exact normal form in the balanced tensor, when the model knows one.
    /// Otherwise the span of balancing generators over the window is used.
    fn balanced_normal_form(&self, _side: Side, _x: &Pair<Self::Key>) -> Option<Pair<Self::Key>> {
        None
    }
}

/// Linear extensions of the structure maps.
pub trait AlgebroidExt: Algebroid {
    fn mul_c(&self, x: &Comb<Self::Key>, y: &Comb<Self::Key>) -> Comb<Self::Key> {
        x.bilinear(y, |a, b| self.mul(a, b))
    }

    fn base_mul_c(&self, x: &Comb<Self::Base>, y: &Comb<Self::Base>) -> Comb<Self::Base> {
        x.bilinear(y, |a, b| self.base_mul(a, b))
    }

    fn s_c(&self, a: &Comb<Self::Base>) -> Comb<Self::Key> {
        a.map_basis(|b| self.source(b))
    }

    fn t_c(&self, a: &Comb<Self::Base>) -> Comb<Self::Key> {
        a.map_basis(|b| self.target(b))
    }

    fn eps_l_c(&self, h: &Comb<Self::Key>) -> Comb<Self::Base> {
        h.map_basis(|k| self.eps_l(k))
    }

    fn eps_r_c(&self, h: &Comb<Self::Key>) -> Comb<Self::Base> {
        h.map_basis(|k| self.eps_r(k))
    }

    fn antipode_c(&self, h: &Comb<Self::Key>) -> Comb<Self::Key> {
        h.map_basis(|k| self.antipode(k))
    }

    fn delta_c(&self, side: Side, h: &Comb<Self::Key>) -> Pair<Self::Key> {
        h.map_basis(|k| match side {
            Side::Left => self.delta_l(k),
            Side::Right => self.delta_r(k),
        })
    }

    /// Factorwise product in `H ⊗ H`.
    fn pair_mul(&self, x: &Pair<Self::Key>, y: &Pair<Self::Key>) -> Pair<Self::Key> {
        x.bilinear(y, |(a, b), (c, d)| self.mul(a, c).tensor(&self.mul(b, d)))
    }

    /// `Σ x₁·x₂` for `x ∈ H ⊗ H`.
    fn contract(&self, x: &Pair<Self::Key>) -> Comb<Self::Key> {
        x.map_basis(|(a, b)| self.mul(a, b))
    }

    fn render(&self, x: &Comb<Self::Key>) -> String {
        x.render(|k| self.key_label(k))
    }

    fn render_base(&self, x: &Comb<Self::Base>) -> String {
        x.render(|k| self.base_label(k))
    }

    fn render_pair(&self, x: &Pair<Self::Key>) -> String {
        x.render(|(a, b)| format!("{}⊗{}", self.key_label(a), self.key_label(b)))
    }

    fn window_support(&self, x: &Comb<Self::Key>) -> bool {
        x.keys().all(|k| self.in_window(k))
    }
}

impl<M: Algebroid + ?Sized> AlgebroidExt for M {}
