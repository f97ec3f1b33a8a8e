use std::sync::Arc;

use super::{Poly, PolyRing, RingError};

/// A ring homomorphism given by the images of the source variables.
///
/// Images may be left unset; applying the map to a polynomial that uses an
/// unmapped variable is an error.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Arc<PolyRing>,
    target: Arc<PolyRing>,
    images: Vec<Option<Poly>>,
}

impl RingMap {
    pub fn new(source: &Arc<PolyRing>, target: &Arc<PolyRing>) -> Self {
        RingMap {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.nvars()],
        }
    }

    /// A map with every image supplied, in source-variable order.
    pub fn from_images(source: &Arc<PolyRing>, target: &Arc<PolyRing>, images: Vec<Poly>) -> Result<Self, RingError> {
        if images.len() != source.nvars() {
            return Err(RingError::ImageCount {
                expected: source.nvars(),
                got: images.len(),
            });
        }
        let mut map = Self::new(source, target);
        for (i, img) in images.into_iter().enumerate() {
            map.set_index(i, img)?;
        }
        Ok(map)
    }

    pub fn set(&mut self, var: &str, image: Poly) -> Result<&mut Self, RingError> {
        let i = self
            .source
            .var_index(var)
            .ok_or_else(|| RingError::UnknownVariable(var.to_string()))?;
        self.set_index(i, image)?;
        Ok(self)
    }

    pub fn set_index(&mut self, index: usize, image: Poly) -> Result<(), RingError> {
        if !image.ring().same_as(&self.target) {
            return Err(RingError::RingMismatch);
        }
        self.images[index] = Some(image);
        Ok(())
    }

    pub fn source(&self) -> &Arc<PolyRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PolyRing> {
        &self.target
    }

    pub fn image(&self, index: usize) -> Option<&Poly> {
        self.images[index].as_ref()
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly, RingError> {
        self.apply_truncated(f, None)
    }

    /// Applies the map, discarding after every product the terms whose
    /// exponent in target variable `var` exceeds `max`. This is exact
    /// arithmetic in the quotient by `var^(max+1)`.
    pub fn apply_truncated(&self, f: &Poly, trunc: Option<(usize, u32)>) -> Result<Poly, RingError> {
        if !f.ring().same_as(&self.source) {
            return Err(RingError::RingMismatch);
        }
        let cut = |p: Poly| match trunc {
            Some((v, max)) => p.truncate_in_var(v, max),
            None => p,
        };
        // powers[i][k] = image_i^(k+1), built lazily
        let mut powers: Vec<Vec<Poly>> = vec![Vec::new(); self.source.nvars()];
        let mut acc = Poly::zero(&self.target);
        for (m, c) in f.terms() {
            let mut t = self.target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = self.images[i]
                    .as_ref()
                    .ok_or_else(|| RingError::MissingImage(self.source.vars()[i].clone()))?;
                let pw = &mut powers[i];
                while pw.len() < e as usize {
                    let next = match pw.last() {
                        None => cut(img.clone()),
                        Some(last) => cut(last * img),
                    };
                    pw.push(next);
                }
                t = cut(&t * &pw[e as usize - 1]);
                if t.is_zero() {
                    break;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `other ∘ self`: first apply `self`, then `other`.
    pub fn then(&self, other: &RingMap) -> Result<RingMap, RingError> {
        if !self.target.same_as(&other.source) {
            return Err(RingError::RingMismatch);
        }
        let mut out = RingMap::new(&self.source, &other.target);
        for (i, img) in self.images.iter().enumerate() {
            if let Some(img) = img {
                out.images[i] = Some(other.apply(img)?);
            }
        }
        Ok(out)
    }
}

/// Substitutes `(variable, image)` pairs into `f`; all images must live in `target`.
pub fn substitute(f: &Poly, map: &[(&str, Poly)], target: &Arc<PolyRing>) -> Result<Poly, RingError> {
    let mut rm = RingMap::new(f.ring(), target);
    for (v, img) in map {
        rm.set(v, img.clone())?;
    }
    rm.apply(f)
}
