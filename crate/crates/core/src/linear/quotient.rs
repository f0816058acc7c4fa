use super::matrix::Matrix;
use super::rational::Rational;
use super::subspace::Subspace;
use super::Vector;

/// `V / U` for a subspace `U`, coordinatized by the non-pivot columns of the
/// canonical basis of `U`. The section sends quotient coordinates to the
/// vector supported on those columns, so `project ∘ section = id` and
/// `ker(project) = U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    complement: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let complement = relations.non_pivots();
        QuotientSpace {
            relations,
            complement,
        }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &[Rational]) -> Vector {
        let r = self.relations.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn section(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![Rational::zero(); self.ambient_dim()];
        for (&c, x) in self.complement.iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }

    pub fn same_class(&self, x: &[Rational], y: &[Rational]) -> bool {
        let d: Vector = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.relations.contains(&d)
    }

    /// The projection as a `dim × ambient` matrix applied to the columns of `m`.
    pub fn project_matrix(&self, m: &Matrix) -> Matrix {
        let cols: Vec<Vector> = m.columns().iter().map(|c| self.project(c)).collect();
        Matrix::from_columns(&cols, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::qi;

    #[test]
    fn section_splits_projection() {
        let rel = Subspace::span(3, vec![vec![qi(1), qi(1), qi(0)]]);
        let qs = QuotientSpace::new(rel);
        assert_eq!(qs.dim(), 2);
        let x = vec![qi(2), qi(3), qi(5)];
        let px = qs.project(&x);
        assert_eq!(qs.project(&qs.section(&px)), px);
        assert!(qs.same_class(&x, &qs.section(&px)));
        assert!(qs.same_class(&[qi(1), qi(0), qi(0)], &[qi(0), qi(-1), qi(0)]));
    }
}
