//! The antitone pair `Fix`, `Gal` between sub-WHAs of `End(E)` and
//! intermediate fields.

use super::UniversalWha;
use crate::error::{Error, Result};
use crate::linear::tensor::reshape;
use crate::linear::{Matrix, Subspace, Vector};
use crate::report::Report;

/// An intermediate field, as a unital subalgebra of `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldDatum {
    pub space: Subspace,
}

impl SubfieldDatum {
    pub fn new(a: &UniversalWha, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != a.degree() {
            return Err(Error::DimensionMismatch("subfield ambient dimension".into()));
        }
        if !a.field.algebra().is_unital_subalgebra(&space) {
            return Err(Error::InvalidInput("not closed under multiplication or missing 1".into()));
        }
        Ok(SubfieldDatum { space })
    }

    pub fn generated(a: &UniversalWha, gens: &[Vector]) -> Self {
        SubfieldDatum {
            space: a.field.algebra().generated_subalgebra(gens),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A subalgebra of `A` closed under `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubWhaDatum {
    pub space: Subspace,
}

impl SubWhaDatum {
    pub fn new(a: &UniversalWha, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != a.wha.dim() {
            return Err(Error::DimensionMismatch("sub-WHA ambient dimension".into()));
        }
        if !a.algebra().is_unital_subalgebra(&space) {
            return Err(Error::InvalidInput("not closed under composition or missing 1".into()));
        }
        if let Some(i) = first_non_closed(a, &space) {
            return Err(Error::InvalidInput(format!("Δ of basis vector {i} leaves S⊗S")));
        }
        Ok(SubWhaDatum { space })
    }

    /// The smallest sub-WHA containing `gens`.
    pub fn closure(a: &UniversalWha, gens: &[Vector]) -> Self {
        let alg = a.algebra();
        let d = a.wha.dim();
        let mut space = alg.generated_subalgebra(gens);
        loop {
            let mut legs = space.basis_vectors();
            for v in space.basis_vectors() {
                let c = reshape(&a.wha.wba.coproduct(&v), d, d);
                legs.extend(c.columns());
                legs.extend(c.row_list());
            }
            let next = alg.generated_subalgebra(&legs);
            if next == space {
                return SubWhaDatum { space };
            }
            space = next;
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `Δ(a) ∈ S⊗S` holds exactly when both the first-leg columns and the
/// second-leg rows of the reshaped `Δ(a)` lie in `S`.
pub fn is_delta_closed(a: &UniversalWha, space: &Subspace) -> bool {
    first_non_closed(a, space).is_none()
}

fn first_non_closed(a: &UniversalWha, space: &Subspace) -> Option<usize> {
    let d = a.wha.dim();
    space.basis_vectors().iter().position(|v| {
        let c = reshape(&a.wha.wba.coproduct(v), d, d);
        !(c.columns().iter().all(|x| space.contains(x)) && c.row_list().iter().all(|x| space.contains(x)))
    })
}

/// `{x : a(x) = a(1)x for all a ∈ W}`.
pub fn fix(a: &UniversalWha, w: &SubWhaDatum) -> SubfieldDatum {
    let n = a.degree();
    let e = a.field.algebra();
    let blocks: Vec<Matrix> = w
        .space
        .basis_vectors()
        .iter()
        .map(|v| {
            let op = a.operator(v);
            op.sub(&e.left_mult(&op.col(0)))
        })
        .collect();
    let space = if blocks.is_empty() { Subspace::full(n) } else { Matrix::vstack(&blocks).kernel() };
    SubfieldDatum { space }
}

/// The commutant of `λ(F)` in `End(E)`.
pub fn gal(a: &UniversalWha, f: &SubfieldDatum) -> SubWhaDatum {
    let lams: Vec<Vector> = f.space.basis_vectors().iter().map(|z| a.lambda(z)).collect();
    let span = Subspace::span(a.wha.dim(), lams);
    let space = a.algebra().commutant(&span).expect("same ambient dimension");
    SubWhaDatum { space }
}

/// Adjointness on the grid, `F = Fix(Gal(F))`, `W ⊆ Gal(Fix(W))`,
/// antitonicity, and `Δ`-closure of every `Gal(F)`.
pub fn check_galois_connection(a: &UniversalWha, subfields: &[SubfieldDatum], subwhas: &[SubWhaDatum]) -> Report {
    let mut r = Report::new("Galois connection");
    let within = |x: &Subspace, y: &Subspace| x.is_subspace_of(y).unwrap_or(false);
    let gals: Vec<SubWhaDatum> = subfields.iter().map(|f| gal(a, f)).collect();
    let fixes: Vec<SubfieldDatum> = subwhas.iter().map(|w| fix(a, w)).collect();

    let not_closed = gals.iter().position(|g| !is_delta_closed(a, &g.space));
    r.record(
        "Gal(F) closed under Δ",
        not_closed.map_or(Ok(()), |i| Err(format!("subfield {i}"))),
    );
    let half = (0..subfields.len()).find(|&i| fix(a, &gals[i]) != subfields[i]);
    r.record("F = Fix(Gal(F))", half.map_or(Ok(()), |i| Err(format!("subfield {i}"))));
    let unit = (0..subwhas.len()).find(|&j| !within(&subwhas[j].space, &gal(a, &fixes[j]).space));
    r.record("W ⊆ Gal(Fix(W))", unit.map_or(Ok(()), |j| Err(format!("sub-WHA {j}"))));

    let mut adj = Ok(());
    'grid: for (j, w) in subwhas.iter().enumerate() {
        for (i, f) in subfields.iter().enumerate() {
            if within(&w.space, &gals[i].space) != within(&f.space, &fixes[j].space) {
                adj = Err(format!("sub-WHA {j}, subfield {i}"));
                break 'grid;
            }
        }
    }
    r.record("W ⊆ Gal(F) ⇔ F ⊆ Fix(W)", adj);

    let mut anti_gal = Ok(());
    for i in 0..subfields.len() {
        for k in 0..subfields.len() {
            if within(&subfields[i].space, &subfields[k].space) && !within(&gals[k].space, &gals[i].space) {
                anti_gal = Err(format!("subfields {i} ⊆ {k}"));
            }
        }
    }
    r.record("F ⊆ F′ ⇒ Gal(F′) ⊆ Gal(F)", anti_gal);
    let mut anti_fix = Ok(());
    for j in 0..subwhas.len() {
        for k in 0..subwhas.len() {
            if within(&subwhas[j].space, &subwhas[k].space) && !within(&fixes[k].space, &fixes[j].space) {
                anti_fix = Err(format!("sub-WHAs {j} ⊆ {k}"));
            }
        }
    }
    r.record("W ⊆ W′ ⇒ Fix(W′) ⊆ Fix(W)", anti_fix);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::roots::automorphisms;
    use crate::linear::tensor::basis_vector;

    fn e4() -> UniversalWha {
        UniversalWha::from_poly("x^4-2").unwrap()
    }

    #[test]
    fn extreme_cases() {
        let a = e4();
        let q = SubfieldDatum::generated(&a, &[]);
        assert_eq!(q.dim(), 1);
        assert_eq!(gal(&a, &q).dim(), 16);
        let full = SubWhaDatum::new(&a, Subspace::full(16)).unwrap();
        assert_eq!(fix(&a, &full), q);
    }

    #[test]
    fn quadratic_subfield_of_e4() {
        let a = e4();
        let f = SubfieldDatum::generated(&a, &[basis_vector(4, 2)]);
        assert_eq!(f.dim(), 2);
        let g = gal(&a, &f);
        assert_eq!(g.dim(), 8);
        assert!(is_delta_closed(&a, &g.space));
        assert_eq!(fix(&a, &g), f);

        let autos = automorphisms(&a.field).unwrap().automorphisms;
        let gens: Vec<Vector> = autos.iter().map(|s| a.from_operator(&s.matrix)).collect();
        let w = SubWhaDatum::closure(&a, &gens);
        assert_eq!(fix(&a, &w), f);
        assert!(SubWhaDatum::new(&a, w.space.clone()).is_ok());
    }

    #[test]
    fn closure_of_unit_is_the_field() {
        let a = e4();
        let w = SubWhaDatum::closure(&a, &[]);
        let lam = Subspace::span(16, (0..4).map(|k| a.lambda(&basis_vector(4, k))));
        assert_eq!(w.space, lam);
        assert_eq!(fix(&a, &w).dim(), 4);
    }

    #[test]
    fn grid_on_e4() {
        let a = e4();
        let fields: Vec<SubfieldDatum> = [vec![], vec![basis_vector(4, 2)], vec![basis_vector(4, 1)]]
            .iter()
            .map(|g| SubfieldDatum::generated(&a, g))
            .collect();
        let whas: Vec<SubWhaDatum> = fields.iter().map(|f| gal(&a, f)).collect();
        let r = check_galois_connection(&a, &fields, &whas);
        assert!(r.passed(), "{r}");
    }
}
