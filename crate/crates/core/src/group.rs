//! Finite subgroups of `GL_n(K)` given by generator matrices.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// A finite matrix group with its full element table in insertion order.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    field: Field,
    n: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementClassification {
    pub element_order: usize,
    pub determinant: String,
    pub rank_g_minus_identity: usize,
    pub is_pseudoreflection: bool,
    pub is_transvection: bool,
    #[serde(skip)]
    pub determinant_value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupClassification {
    pub order: usize,
    pub in_sl: bool,
    pub has_pseudoreflection: bool,
    pub has_transvection: bool,
    pub modular: bool,
    /// Index (into the element table) of the first element of order `|G|`.
    pub cyclic_generator: Option<usize>,
    pub pseudoreflections: Vec<usize>,
    pub transvections: Vec<usize>,
}

impl GroupClassification {
    pub fn is_cyclic(&self) -> bool {
        self.cyclic_generator.is_some()
    }
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of `generators` under multiplication.
    pub fn generate(field: &Field, n: usize, generators: Vec<Matrix>, cap: usize) -> Result<FiniteMatrixGroup> {
        for g in &generators {
            if g.rows() != n || g.cols() != n {
                return Err(Error::DimensionMismatch(format!("generator is {}x{}, expected {n}x{n}", g.rows(), g.cols())));
            }
            if g.field() != field {
                return Err(Error::ContextMismatch);
            }
            if g.determinant()?.is_zero() {
                return Err(Error::NotInvertible);
            }
        }
        let id = Matrix::identity(field, n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &generators {
                let prod = current.mul(g)?;
                if !index.contains_key(&prod) {
                    if elements.len() == cap {
                        return Err(Error::OrderCapExceeded(cap));
                    }
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
        }
        Ok(FiniteMatrixGroup { field: field.clone(), n, generators, elements, index })
    }

    pub fn closure(field: &Field, n: usize, generators: Vec<Matrix>) -> Result<FiniteMatrixGroup> {
        Self::generate(field, n, generators, DEFAULT_ORDER_CAP)
    }

    pub fn trivial(field: &Field, n: usize) -> FiniteMatrixGroup {
        Self::closure(field, n, Vec::new()).expect("identity group")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &Matrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Matrix) -> bool {
        self.index.contains_key(g)
    }

    /// `|G|` as a field element.
    pub fn order_in_field(&self) -> Scalar {
        self.field.from_int(self.order() as i64)
    }

    pub fn is_modular(&self) -> bool {
        self.order().is_multiple_of(self.field.characteristic() as usize)
    }

    /// Subgroup generated by some elements of this group.
    pub fn subgroup(&self, generators: Vec<Matrix>) -> Result<FiniteMatrixGroup> {
        if let Some(g) = generators.iter().find(|g| !self.contains(g)) {
            return Err(Error::DimensionMismatch(format!("{g:?} is not a group element")));
        }
        Self::generate(&self.field, self.n, generators, self.order().max(1))
    }

    pub fn element_order(&self, g: &Matrix) -> usize {
        let id = Matrix::identity(&self.field, self.n);
        let mut power = g.clone();
        let mut k = 1;
        while power != id {
            power = power.mul(g).expect("square");
            k += 1;
            assert!(k <= self.order().max(1) * 2 + 1, "element of infinite order");
        }
        k
    }

    pub fn classify_element(&self, g: &Matrix) -> ElementClassification {
        let det = g.determinant().expect("square");
        let diff = g.sub(&Matrix::identity(&self.field, self.n)).expect("square");
        let rank = diff.rank();
        let pseudo = rank == 1;
        let transvection = pseudo && diff.mul(&diff).expect("square").is_zero();
        ElementClassification {
            element_order: self.element_order(g),
            determinant: self.field.format(det),
            rank_g_minus_identity: rank,
            is_pseudoreflection: pseudo,
            is_transvection: transvection,
            determinant_value: det,
        }
    }

    /// Height of the ideal `(1-g)R`: the rank of the coefficient matrix of the forms `(1-g)(x_i)`.
    pub fn one_minus_g_height(&self, g: &Matrix) -> usize {
        g.one_minus().rank()
    }

    pub fn classify_all(&self) -> Vec<ElementClassification> {
        self.elements.par_iter().map(|g| self.classify_element(g)).collect()
    }

    pub fn classify(&self) -> GroupClassification {
        let table = self.classify_all();
        let order = self.order();
        GroupClassification {
            order,
            in_sl: table.iter().all(|c| c.determinant_value == Scalar::ONE),
            has_pseudoreflection: table.iter().any(|c| c.is_pseudoreflection),
            has_transvection: table.iter().any(|c| c.is_transvection),
            modular: self.is_modular(),
            cyclic_generator: table.iter().position(|c| c.element_order == order),
            pseudoreflections: (0..order).filter(|&i| table[i].is_pseudoreflection).collect(),
            transvections: (0..order).filter(|&i| table[i].is_transvection).collect(),
        }
    }
}
