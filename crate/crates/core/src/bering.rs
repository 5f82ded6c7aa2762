use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{ActionKey, MultiModule};
use crate::tensor::Lin;

/// An algebra `L` with commuting maps `s: B → L` and `t: B̄ → L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeRing<F> {
    pub base: Algebra<F>,
    pub total: Algebra<F>,
    pub s: AlgebraMorphism<F>,
    pub t: AlgebraMorphism<F>,
}

impl<F: Field> BeRing<F> {
    pub fn new(base: Algebra<F>, total: Algebra<F>, s: Matrix<F>, t: Matrix<F>) -> Result<Self> {
        let s = AlgebraMorphism::new("s", &base, &total, s)?;
        let t = AlgebraMorphism::new("t", &base.opposite(), &total, t)?;
        let nb = base.dim();
        for i in 0..nb {
            for j in 0..nb {
                let (si, tj) = (s.apply(&base.basis(i)), t.apply(&base.basis(j)));
                if total.mul(&si, &tj) != total.mul(&tj, &si) {
                    return Err(Error::NonCommutingImages { witness: vec![i, j] });
                }
            }
        }
        Ok(BeRing { base, total, s, t })
    }

    pub fn n(&self) -> usize {
        self.total.dim()
    }

    pub fn nb(&self) -> usize {
        self.base.dim()
    }

    pub fn s_of(&self, b: &[F]) -> Vec<F> {
        self.s.apply(b)
    }

    pub fn t_of(&self, b: &[F]) -> Vec<F> {
        self.t.apply(b)
    }

    pub fn s_lin(&self) -> Lin<F> {
        self.s.lin()
    }

    pub fn t_lin(&self) -> Lin<F> {
        self.t.lin()
    }

    /// `L` with `s(b)X`, `t(b)X`, `Xs(b)` and `Xt(b)` as its four `B`-actions.
    pub fn module(&self, name: &str) -> MultiModule<F> {
        let l = &self.total;
        let nb = self.nb();
        let img = |f: &AlgebraMorphism<F>| -> Vec<Vec<F>> { (0..nb).map(|i| f.apply(&self.base.basis(i))).collect() };
        let (si, ti) = (img(&self.s), img(&self.t));
        MultiModule::new(name, l.dim())
            .with_action(ActionKey::left_b(), si.iter().map(|x| l.left_matrix(x)).collect())
            .with_action(ActionKey::left_bbar(), ti.iter().map(|x| l.left_matrix(x)).collect())
            .with_action(ActionKey::right_b(), si.iter().map(|x| l.right_matrix(x)).collect())
            .with_action(ActionKey::right_bbar(), ti.iter().map(|x| l.right_matrix(x)).collect())
    }
}
