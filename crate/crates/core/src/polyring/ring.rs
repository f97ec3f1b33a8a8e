use std::fmt;
use std::sync::Arc;

use super::{Coeff, Field, MonomialOrder, Poly, RingError};

/// Variables, monomial order, coefficient field and optional grading weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
    field: Field,
    weights: Option<Vec<u32>>,
}

pub(crate) fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
        field: Field,
    ) -> Result<Arc<Self>, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(RingError::BadVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        check_order(&order, vars.len())?;
        Ok(Arc::new(PolyRing {
            vars,
            order,
            field,
            weights: None,
        }))
    }

    /// Grevlex over the rationals.
    pub fn rational<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Arc<Self>, RingError> {
        Self::new(vars, MonomialOrder::Grevlex, Field::Rational)
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Arc<Self>, RingError> {
        if weights.len() != self.vars.len() {
            return Err(RingError::WeightCount {
                expected: self.vars.len(),
                got: weights.len(),
            });
        }
        Ok(Arc::new(PolyRing {
            weights: Some(weights),
            ..self.clone()
        }))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>, RingError> {
        check_order(&order, self.vars.len())?;
        Ok(Arc::new(PolyRing { order, ..self.clone() }))
    }

    pub fn with_field(&self, field: Field) -> Result<Arc<Self>, RingError> {
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(Arc::new(PolyRing { field, ..self.clone() }))
    }

    /// Same field, new variable list; weights are dropped and the order is
    /// carried over when it still makes sense, otherwise grevlex.
    pub fn with_vars<S: Into<String>>(
        &self,
        vars: impl IntoIterator<Item = S>,
        order: Option<MonomialOrder>,
    ) -> Result<Arc<Self>, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let order = order.unwrap_or(match &self.order {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::Grevlex,
        });
        Self::new(vars, order, self.field)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Poly, RingError> {
        let i = self
            .var_index(name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        Ok(Poly::var(self, i))
    }

    pub fn gen(self: &Arc<Self>, index: usize) -> Poly {
        Poly::var(self, index)
    }

    pub fn zero(self: &Arc<Self>) -> Poly {
        Poly::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> Poly {
        Poly::constant(self, self.field.one())
    }

    pub fn constant_i64(self: &Arc<Self>, c: i64) -> Poly {
        Poly::constant(self, self.field.from_i64(c))
    }

    pub fn constant(self: &Arc<Self>, c: Coeff) -> Poly {
        Poly::constant(self, c)
    }

    pub fn parse(self: &Arc<Self>, src: &str) -> Result<Poly, super::ParseError> {
        super::parse_poly(src, self)
    }

    /// True when both rings carry identical variables, order and field.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

fn check_order(order: &MonomialOrder, nvars: usize) -> Result<(), RingError> {
    match order {
        MonomialOrder::Weighted(w) if w.len() != nvars => Err(RingError::WeightCount {
            expected: nvars,
            got: w.len(),
        }),
        MonomialOrder::Block(k) if *k > nvars => Err(RingError::BadBlock { split: *k, nvars }),
        _ => Ok(()),
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.vars.join(","), self.order.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_follow_grammar() {
        assert!(PolyRing::rational(["x", "y_1", "Z9"]).is_ok());
        assert!(matches!(PolyRing::rational(["1x"]), Err(RingError::BadVariableName(_))));
        assert!(matches!(PolyRing::rational(["_x"]), Err(RingError::BadVariableName(_))));
        assert!(matches!(
            PolyRing::rational(["x", "x"]),
            Err(RingError::DuplicateVariable(_))
        ));
    }

    #[test]
    fn weights_must_match_variable_count() {
        let r = PolyRing::rational(["x", "y"]).unwrap();
        assert!(r.with_weights(vec![0, 1]).is_ok());
        assert!(r.with_weights(vec![0]).is_err());
        assert!(PolyRing::new(["x"], MonomialOrder::Weighted(vec![1, 2]), Field::Rational).is_err());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(PolyRing::new(["x"], MonomialOrder::Grevlex, Field::Prime(15)).is_err());
    }
}
