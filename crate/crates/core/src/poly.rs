//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vector, so iteration in
//! key order is iteration in the context's monomial order and the last entry
//! is the leading term. No zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::context::{Monomial, Order, VariableContext};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: VariableContext,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ctx: &VariableContext, field: Field) -> Polynomial {
        Polynomial { ctx: ctx.clone(), field, terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &VariableContext, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(ctx, c.field());
        p.add_term(ctx.one(), c);
        p
    }

    pub fn one(ctx: &VariableContext, field: Field) -> Polynomial {
        Polynomial::constant(ctx, Scalar::one(field))
    }

    pub fn variable(ctx: &VariableContext, name: &str, field: Field) -> Result<Polynomial> {
        let m = ctx.variable(name)?;
        Ok(Polynomial::term(ctx, m, Scalar::one(field)))
    }

    pub fn term(ctx: &VariableContext, m: Monomial, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(ctx, c.field());
        p.add_term(m, c);
        p
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// In-place accumulation keeping the form canonical.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.arity(), self.ctx.arity());
        debug_assert_eq!(c.field(), self.field);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ctx: self.ctx.clone(), field: self.field, terms }
    }

    /// Exact product.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(&self.ctx, self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        if c.is_zero() {
            return Polynomial::zero(&self.ctx, self.field);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { ctx: self.ctx.clone(), field: self.field, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        Polynomial { ctx: self.ctx.clone(), field: self.field, terms }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx, self.field);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same context");
        }
        acc
    }

    /// The order-maximal term. Fails on the zero polynomial.
    pub fn leading_term(&self) -> Result<(Monomial, Scalar)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<Monomial> {
        Ok(self.leading_term()?.0)
    }

    /// Partial derivative with respect to the idx-th variable.
    pub fn derivative(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx, self.field);
        for (m, c) in &self.terms {
            let e = m.exponent(idx);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[idx] = e - 1;
            let factor = Scalar::from_integer(e as i64, self.field);
            out.add_term(self.ctx.monomial(exps).expect("same arity"), c * &factor);
        }
        out
    }

    /// Substitutes an image polynomial for every variable occurring in self.
    /// All images must share one context; variables of self without an image
    /// are an error.
    pub fn compose(&self, images: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let (target_ctx, field) = match images.values().next() {
            Some(p) => (p.context().clone(), p.field()),
            None => (self.ctx.clone(), self.field),
        };
        for p in images.values() {
            if !p.context().same_as(&target_ctx) {
                return Err(Error::ContextMismatch);
            }
            if p.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        if field != self.field {
            return Err(Error::FieldMismatch);
        }
        // image lookup by source variable index, with a power cache per variable
        let mut by_index: Vec<Option<&Polynomial>> = vec![None; self.ctx.arity()];
        for (name, p) in images {
            if let Some(i) = self.ctx.index_of(name) {
                by_index[i] = Some(p);
            }
        }
        let mut power_cache: Vec<Vec<Polynomial>> = vec![Vec::new(); self.ctx.arity()];
        let mut out = Polynomial::zero(&target_ctx, field);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target_ctx, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = by_index[i]
                    .ok_or_else(|| Error::MissingImage(self.ctx.name(i).to_owned()))?;
                let cache = &mut power_cache[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&target_ctx, field));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().checked_mul(image)?;
                    cache.push(next);
                }
                term = term.checked_mul(&cache[e as usize])?;
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in a context containing (at least) the
    /// same variable names.
    pub fn extend_into(&self, target: &VariableContext) -> Result<Polynomial> {
        let mut map = vec![0usize; self.ctx.arity()];
        for (i, name) in self.ctx.names().iter().enumerate() {
            map[i] = target.index_of(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        }
        let mut out = Polynomial::zero(target, self.field);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.arity()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] = e;
            }
            out.add_term(target.monomial(exps)?, c.clone());
        }
        Ok(out)
    }

    /// The polynomial in the trailing variables multiplying exactly the
    /// designated-block monomial `m`. The result lives in the same context
    /// with all leading-block exponents zero.
    pub fn coefficient_of(&self, m: &Monomial) -> Result<Polynomial> {
        let block = 0..self.ctx.block_len();
        if !m.supported_in(block.clone()) {
            return Err(Error::NonBlockMonomial);
        }
        let mut out = Polynomial::zero(&self.ctx, self.field);
        for (mono, c) in &self.terms {
            if mono.restricted_to(block.clone()) == *m {
                out.add_term(mono.without_block(block.clone()), c.clone());
            }
        }
        Ok(out)
    }

    /// Full evaluation at scalar values, one per variable.
    pub fn evaluate(&self, values: &[Scalar]) -> Result<Scalar> {
        if values.len() != self.ctx.arity() {
            return Err(Error::ContextMismatch);
        }
        for v in values {
            if v.field() != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        let mut acc = Scalar::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &values[i].pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Canonical JSON: `{"vars": [...], "terms": [{"c": "p/q", "e": [...]}]}`
    /// with terms descending in the monomial order. A `"field"` key is added
    /// for prime fields and a `"block"` key for two-block orders.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| json!({ "c": c.to_string(), "e": m.exponents() }))
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("vars".into(), json!(self.ctx.names()));
        obj.insert("terms".into(), Value::Array(terms));
        if let Field::Prime(p) = self.field {
            obj.insert("field".into(), json!(format!("fp:{p}")));
        }
        if let Order::Block { lead } = self.ctx.order() {
            obj.insert("block".into(), json!(lead));
        }
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Polynomial> {
        let obj = value.as_object().ok_or_else(|| Error::InvalidJson("expected object".into()))?;
        let vars: Vec<String> = obj
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidJson("missing vars".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| Error::InvalidJson("non-string variable".into()))
            })
            .collect::<Result<_>>()?;
        let ctx = match obj.get("block").and_then(Value::as_u64) {
            Some(lead) => {
                let lead = lead as usize;
                if lead > vars.len() {
                    return Err(Error::InvalidJson("block exceeds arity".into()));
                }
                VariableContext::block(&vars[..lead], &vars[lead..])?
            }
            None => VariableContext::lex(&vars)?,
        };
        let field = match obj.get("field").and_then(Value::as_str) {
            None => Field::Rationals,
            Some("q") => Field::Rationals,
            Some(s) => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidJson(format!("bad field `{s}`")))?;
                Field::prime(p)?
            }
        };
        let mut out = Polynomial::zero(&ctx, field);
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidJson("missing terms".into()))?;
        for t in terms {
            let c = t
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidJson("missing coefficient".into()))?;
            let coeff = parse_coefficient(c, field)?;
            let exps: Vec<u32> = t
                .get("e")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidJson("missing exponents".into()))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|v| u32::try_from(v).ok())
                        .ok_or_else(|| Error::InvalidJson("bad exponent".into()))
                })
                .collect::<Result<_>>()?;
            out.add_term(ctx.monomial(exps)?, coeff);
        }
        Ok(out)
    }
}

fn parse_coefficient(text: &str, field: Field) -> Result<Scalar> {
    let bad = || Error::InvalidJson(format!("bad coefficient `{text}`"));
    match text.split_once('/') {
        None => {
            let n: num_bigint::BigInt = text.parse().map_err(|_| bad())?;
            Ok(Scalar::from_bigint(&n, field))
        }
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
            Scalar::from_fraction(&n, &d, field)
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms descending in the monomial order, reduced
    /// fractional coefficients, `+`/`-` separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign_negative = c.is_negative();
            let abs = if sign_negative { -c } else { c.clone() };
            if i == 0 {
                if sign_negative {
                    write!(f, "-")?;
                }
            } else if sign_negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ctx.render_monomial(m))?;
            } else {
                write!(f, "{}*{}", abs, self.ctx.render_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ctx_xy() -> VariableContext {
        VariableContext::lex(&["x", "y"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x + y", &ctx, Field::Rationals).unwrap();
        let g = parse_polynomial("x - y", &ctx, Field::Rationals).unwrap();
        let expect = parse_polynomial("x^2 - y^2", &ctx, Field::Rationals).unwrap();
        assert_eq!(f.checked_mul(&g).unwrap(), expect);
    }

    #[test]
    fn f2_times_y_for_n2() {
        let ctx = ctx_xy();
        let f2 = parse_polynomial("x^2*y^2 - y^4", &ctx, Field::Rationals).unwrap();
        let y = parse_polynomial("y", &ctx, Field::Rationals).unwrap();
        let expect = parse_polynomial("x^2*y^3 - y^5", &ctx, Field::Rationals).unwrap();
        assert_eq!(f2.checked_mul(&y).unwrap(), expect);
    }

    #[test]
    fn leading_term_of_f3_is_x5() {
        let ctx = ctx_xy();
        let f3 = parse_polynomial("x^5 - x*y^3", &ctx, Field::Rationals).unwrap();
        let (m, c) = f3.leading_term().unwrap();
        assert_eq!(m, ctx.monomial(vec![5, 0]).unwrap());
        assert!(c.is_one());
        assert_eq!(
            Polynomial::zero(&ctx, Field::Rationals).leading_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn leading_term_under_block_order() {
        let ctx = VariableContext::block(&["x", "y"], &["z_01", "z_10"]).unwrap();
        let f = parse_polynomial("z_01*x + z_10^5*y", &ctx, Field::Rationals).unwrap();
        let (m, c) = f.leading_term().unwrap();
        assert_eq!(ctx.render_monomial(&m), "x*z_01");
        assert!(c.is_one());
    }

    #[test]
    fn compose_binomial_square() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x^2", &ctx, Field::Rationals).unwrap();
        let mut images = BTreeMap::new();
        images.insert(
            "x".to_owned(),
            parse_polynomial("x + y", &ctx, Field::Rationals).unwrap(),
        );
        let expect = parse_polynomial("x^2 + 2*x*y + y^2", &ctx, Field::Rationals).unwrap();
        assert_eq!(f.compose(&images).unwrap(), expect);
    }

    #[test]
    fn compose_sign_flip_negates_f3() {
        let ctx = ctx_xy();
        let f3 = parse_polynomial("x^5 - x*y^3", &ctx, Field::Rationals).unwrap();
        let mut images = BTreeMap::new();
        images.insert("x".to_owned(), parse_polynomial("-x", &ctx, Field::Rationals).unwrap());
        images.insert("y".to_owned(), parse_polynomial("y", &ctx, Field::Rationals).unwrap());
        assert_eq!(f3.compose(&images).unwrap(), f3.neg());
    }

    #[test]
    fn compose_identity_is_identity() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x", &ctx, Field::Rationals).unwrap();
        let phi = parse_polynomial("x + 3*x*y + y^2", &ctx, Field::Rationals).unwrap();
        let mut images = BTreeMap::new();
        images.insert("x".to_owned(), phi.clone());
        assert_eq!(f.compose(&images).unwrap(), phi);
    }

    #[test]
    fn compose_missing_image_errors() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x*y", &ctx, Field::Rationals).unwrap();
        let mut images = BTreeMap::new();
        images.insert("x".to_owned(), parse_polynomial("x", &ctx, Field::Rationals).unwrap());
        assert_eq!(f.compose(&images), Err(Error::MissingImage("y".into())));
    }

    #[test]
    fn coefficient_of_in_plain_context() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x + 2*y", &ctx, Field::Rationals).unwrap();
        let x = ctx.variable("x").unwrap();
        let got = f.coefficient_of(&x).unwrap();
        assert_eq!(got, Polynomial::one(&ctx, Field::Rationals));
    }

    #[test]
    fn coefficient_of_rejects_non_block_monomial() {
        let ctx = VariableContext::block(&["x"], &["z"]).unwrap();
        let f = parse_polynomial("x*z", &ctx, Field::Rationals).unwrap();
        let z = ctx.variable("z").unwrap();
        assert_eq!(f.coefficient_of(&z), Err(Error::NonBlockMonomial));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x^2*y^2 - 1/6*y^4 + 7", &ctx, Field::Rationals).unwrap();
        let j = f.to_json();
        assert_eq!(Polynomial::from_json(&j).unwrap(), f);
        assert_eq!(Polynomial::from_json(&j).unwrap().to_json(), j);
    }

    #[test]
    fn display_round_trip() {
        let ctx = ctx_xy();
        for text in ["0", "-x^5 + x*y^3", "1/2*x - 3", "x^2*y^2 - y^4"] {
            let f = parse_polynomial(text, &ctx, Field::Rationals).unwrap();
            assert_eq!(f.to_string(), text);
        }
    }
}
