//! Variable contexts, monomial orders, and exponent-vector monomials.
//!
//! Both supported orders compare exponent vectors plainly left to right:
//! pure lexicographic uses the declared variable list, and the two-block
//! order lists the leading block first, so slice comparison realizes it as
//! well. The block split is retained for the operations that need to know
//! which variables act as coefficients.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// Lexicographic on the full variable list.
    Lex,
    /// The first `lead` variables are compared lexicographically first, the
    /// trailing block breaks ties.
    Block { lead: usize },
}

#[derive(Debug)]
struct ContextInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
    order: Order,
}

/// Shared, immutable list of ordered variables with a monomial order.
#[derive(Debug, Clone)]
pub struct VariableContext {
    inner: Arc<ContextInner>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    fn build(names: Vec<String>, order: Order) -> Result<VariableContext> {
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableContext { inner: Arc::new(ContextInner { names, index, order }) })
    }

    /// Pure lexicographic order; earlier names are larger.
    pub fn lex<S: AsRef<str>>(names: &[S]) -> Result<VariableContext> {
        Self::build(names.iter().map(|s| s.as_ref().to_owned()).collect(), Order::Lex)
    }

    /// Two-block order: the leading block dominates, the trailing block
    /// breaks ties. Both blocks are lexicographic in the order given.
    pub fn block<S: AsRef<str>, T: AsRef<str>>(lead: &[S], trail: &[T]) -> Result<VariableContext> {
        let names: Vec<String> = lead
            .iter()
            .map(|s| s.as_ref().to_owned())
            .chain(trail.iter().map(|s| s.as_ref().to_owned()))
            .collect();
        Self::build(names, Order::Block { lead: lead.len() })
    }

    pub fn arity(&self) -> usize {
        self.inner.names.len()
    }

    pub fn order(&self) -> Order {
        self.inner.order
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.inner.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    /// Number of leading-block variables (all of them under pure lex).
    pub fn block_len(&self) -> usize {
        match self.inner.order {
            Order::Lex => self.arity(),
            Order::Block { lead } => lead,
        }
    }

    pub fn same_as(&self, other: &VariableContext) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.names == other.inner.names && self.inner.order == other.inner.order)
    }

    pub fn one(&self) -> Monomial {
        Monomial { exps: vec![0; self.arity()] }
    }

    pub fn variable(&self, name: &str) -> Result<Monomial> {
        let idx = self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_owned()))?;
        Ok(self.variable_by_index(idx))
    }

    pub fn variable_by_index(&self, idx: usize) -> Monomial {
        let mut exps = vec![0; self.arity()];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Result<Monomial> {
        if exps.len() != self.arity() {
            return Err(Error::ContextMismatch);
        }
        Ok(Monomial { exps })
    }

    /// Total monomial order realized by plain slice comparison.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        a.exps.cmp(&b.exps)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.inner.names[i].clone()
                } else {
                    format!("{}^{}", self.inner.names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_owned()
        } else {
            factors.join("*")
        }
    }
}

impl PartialEq for VariableContext {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for VariableContext {}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inner.order {
            Order::Lex => write!(f, "lex({})", self.inner.names.join(" > ")),
            Order::Block { lead } => write!(
                f,
                "block({} | {})",
                self.inner.names[..lead].join(" > "),
                self.inner.names[lead..].join(" > ")
            ),
        }
    }
}

/// Exponent vector over a context's variable list; the zero vector is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().sum()
    }

    /// Product of monomials; exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial { exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when every positive exponent sits inside `block`.
    pub fn supported_in(&self, block: std::ops::Range<usize>) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || (i >= block.start && i < block.end))
    }

    /// Copy of the monomial with all exponents outside `block` set to zero.
    pub fn restricted_to(&self, block: std::ops::Range<usize>) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| if i >= block.start && i < block.end { e } else { 0 })
            .collect();
        Monomial { exps }
    }

    /// Complement of `restricted_to`.
    pub fn without_block(&self, block: std::ops::Range<usize>) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| if i >= block.start && i < block.end { 0 } else { e })
            .collect();
        Monomial { exps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_rejects_duplicates_and_bad_names() {
        assert!(matches!(
            VariableContext::lex(&["x", "x"]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            VariableContext::lex(&["x", "2y"]),
            Err(Error::InvalidVariableName(_))
        ));
    }

    #[test]
    fn lex_order_on_two_variables() {
        let ctx = VariableContext::lex(&["x", "y"]).unwrap();
        let x = ctx.variable("x").unwrap();
        let y = ctx.variable("y").unwrap();
        assert_eq!(ctx.cmp_monomials(&x, &y), std::cmp::Ordering::Greater);
        // x*y < x^2 under lex x > y
        assert_eq!(
            ctx.cmp_monomials(&x.mul(&y), &x.pow(2)),
            std::cmp::Ordering::Less
        );
    }

    #[test]
    fn block_order_dominated_by_leading_block() {
        let ctx = VariableContext::block(&["x", "y"], &["z_01", "z_10"]).unwrap();
        let x_z01 = ctx.variable("x").unwrap().mul(&ctx.variable("z_01").unwrap());
        let y_z10_5 = ctx.variable("y").unwrap().mul(&ctx.variable("z_10").unwrap().pow(5));
        // any x beats any pure-y monomial regardless of the z part
        assert_eq!(ctx.cmp_monomials(&x_z01, &y_z10_5), std::cmp::Ordering::Greater);
        let z01_2 = ctx.variable("z_01").unwrap().pow(2);
        let z10 = ctx.variable("z_10").unwrap();
        assert_eq!(ctx.cmp_monomials(&z01_2, &z10), std::cmp::Ordering::Greater);
    }

    #[test]
    fn divisibility_and_quotient() {
        let ctx = VariableContext::lex(&["x", "y"]).unwrap();
        let xy2 = ctx.monomial(vec![1, 2]).unwrap();
        let x3y5 = ctx.monomial(vec![3, 5]).unwrap();
        assert!(xy2.divides(&x3y5));
        assert_eq!(xy2.quotient_into(&x3y5), ctx.monomial(vec![2, 3]).unwrap());
        assert!(!x3y5.divides(&xy2));
        assert_eq!(xy2.lcm(&x3y5), x3y5);
    }
}
