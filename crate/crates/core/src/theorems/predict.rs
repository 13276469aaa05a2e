use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::UniPoly;
use crate::jacobitrudi::{NPoly, QBracket, QyPoly, Specialization, SpecializationKind};
use crate::partitions::Partition;

/// Predicted Smith diagonal, kept as the content multiset of each hook so
/// it can be rendered factored or expanded in any of the three rings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedDiagonal {
    pub kind: SpecializationKind,
    /// `contents[i - 1]` lists the contents of `D_{t-i+1}`.
    pub contents: Vec<Vec<i64>>,
}

/// Entry `i` (1-based) is the product over `D_{t-i+1}` of the kind's linear
/// factor; empty hooks give 1.
pub fn predict(shape: &Partition, t: usize, kind: SpecializationKind) -> Result<PredictedDiagonal> {
    if t < shape.len() {
        return Err(Error::TBelowLength { t, len: shape.len() });
    }
    let contents = (1..=t)
        .map(|i| shape.diagonal_hook(t - i + 1).contents())
        .collect();
    Ok(PredictedDiagonal { kind, contents })
}

impl PredictedDiagonal {
    pub fn len(&self) -> usize {
        self.contents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contents.is_empty()
    }

    /// Expanded entries in the ring of `S`, not normalized.
    pub fn entries<S: Specialization>(&self) -> Vec<UniPoly<S::Coeff>> {
        debug_assert_eq!(S::KIND, self.kind);
        self.contents
            .iter()
            .map(|cs| {
                cs.iter()
                    .fold(UniPoly::one(S::VAR), |acc, &c| &acc * &S::linear_factor(c))
            })
            .collect()
    }

    /// Monic expanded entries in the ring of `S`.
    pub fn monic_entries<S: Specialization>(&self) -> Vec<UniPoly<S::Coeff>> {
        self.entries::<S>().iter().map(UniPoly::monic).collect()
    }

    /// Monic expanded entries rendered as text.
    pub fn expanded(&self) -> Vec<String> {
        fn render<S: Specialization>(p: &PredictedDiagonal) -> Vec<String> {
            p.monic_entries::<S>().iter().map(ToString::to_string).collect()
        }
        match self.kind {
            SpecializationKind::NPoly => render::<NPoly>(self),
            SpecializationKind::QyPoly => render::<QyPoly>(self),
            SpecializationKind::QBracket => render::<QBracket>(self),
        }
    }

    /// Factored entries, e.g. `(n - 2)*(n - 1)*n*(n + 1)`.
    pub fn factored(&self) -> Vec<String> {
        let render_factor = match self.kind {
            SpecializationKind::NPoly => NPoly::render_factor,
            SpecializationKind::QyPoly => QyPoly::render_factor,
            SpecializationKind::QBracket => QBracket::render_factor,
        };
        self.contents
            .iter()
            .map(|cs| {
                if cs.is_empty() {
                    "1".to_string()
                } else {
                    let mut sorted = cs.clone();
                    sorted.sort_unstable();
                    sorted.into_iter().map(render_factor).collect::<Vec<_>>().join("*")
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Field, RatFunc, Rational, Var};
    use crate::jacobitrudi::bracket;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn falling(lo: i64, hi: i64) -> UniPoly<Rational> {
        (lo..=hi)
            .map(|c| UniPoly::linear(Var::N, Rational::from(c)))
            .product()
    }

    #[test]
    fn example_7552() {
        let pred = predict(&p(&[7, 5, 5, 2]), 4, SpecializationKind::NPoly).unwrap();
        let e = pred.entries::<NPoly>();
        assert_eq!(e[0], UniPoly::one(Var::N));
        assert_eq!(e[1], falling(0, 2));
        assert_eq!(e[2], falling(-2, 3));
        assert_eq!(e[3], falling(-3, 6));
        assert_eq!(pred.factored()[1], "n*(n + 1)*(n + 2)");
        assert_eq!(pred.factored()[0], "1");
    }

    #[test]
    fn single_cell() {
        let b = predict(&p(&[1]), 1, SpecializationKind::QBracket).unwrap();
        assert_eq!(b.entries::<QBracket>(), vec![UniPoly::x(Var::Y)]);
        assert!(bracket(0).is_zero());
        let q = predict(&p(&[1]), 1, SpecializationKind::QyPoly).unwrap();
        assert_eq!(
            q.entries::<QyPoly>(),
            vec![UniPoly::new(Var::Y, vec![RatFunc::one(), RatFunc::from_i64(-1)])]
        );
        assert_eq!(q.expanded(), vec!["y - 1"]);
    }

    #[test]
    fn empty_partition_predicts_ones() {
        for kind in SpecializationKind::ALL {
            let pred = predict(&Partition::empty(), 3, kind).unwrap();
            assert_eq!(pred.expanded(), vec!["1"; 3]);
        }
    }

    #[test]
    fn t_below_length() {
        assert!(matches!(
            predict(&p(&[1, 1]), 1, SpecializationKind::NPoly),
            Err(Error::TBelowLength { t: 1, len: 2 })
        ));
    }

    #[test]
    fn predictions_form_divisibility_chain() {
        for l in Partition::up_to(8) {
            for t in l.len().max(1)..=l.len() + 2 {
                let n = predict(&l, t, SpecializationKind::NPoly).unwrap().entries::<NPoly>();
                let qy = predict(&l, t, SpecializationKind::QyPoly).unwrap().entries::<QyPoly>();
                for i in 1..t {
                    assert!(n[i].is_divisible_by(&n[i - 1]).unwrap());
                    assert!(qy[i].is_divisible_by(&qy[i - 1]).unwrap());
                }
            }
        }
    }
}
