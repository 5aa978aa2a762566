//! Composition of fractal ingredients along a covering, and the distinct-row
//! extension that raises rows and strength together.

use log::warn;

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::family::{concat_disjoint, HashFamily, Symbol};
use crate::report::VerifyReport;
use crate::verify::{fractal_enumeration_count, sample_verify_fractal, EXHAUSTIVE_BUDGET};

/// Ingredient fractality is checked by sampling when exhaustive checking
/// would exceed [`EXHAUSTIVE_BUDGET`].
pub const FRACTAL_SAMPLES: u64 = 100_000;
pub const FRACTAL_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    /// Check ingredient fractality before composing.
    #[default]
    Verify,
    /// Take ingredients on trust.
    Trusted,
}

/// Where a row of a realized ingredient comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// A row of all-distinct symbols.
    Distinct,
    /// The given row of the base family.
    Base(usize),
}

/// A fractal base family spread over `n` rows: base rows at the `Base`
/// positions, all-distinct rows elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractalIngredient {
    base: HashFamily,
    parts: usize,
    placement: Vec<Placement>,
}

impl FractalIngredient {
    /// `parts` is the number of classes the base distributes; values at or
    /// above the base row count mean the base is perfect.
    pub fn new(base: HashFamily, parts: usize, placement: Vec<Placement>) -> Result<Self> {
        if parts == 0 {
            return Err(Error::invalid("ingredient part count must be at least 1"));
        }
        let tb = base.rows();
        let mut used = vec![false; tb];
        for p in &placement {
            if let Placement::Base(i) = *p {
                if i >= tb || std::mem::replace(&mut used[i], true) {
                    return Err(Error::PlacementMismatch(format!(
                        "base row {i} placed twice or out of range for {tb} rows"
                    )));
                }
            }
        }
        if used.iter().any(|u| !u) {
            return Err(Error::PlacementMismatch(format!(
                "every one of the {tb} base rows must be placed exactly once"
            )));
        }
        Ok(Self {
            parts: parts.min(tb.max(1)),
            base,
            placement,
        })
    }

    /// Distinct rows where `c` lies in the covering set, base rows in order
    /// everywhere else.
    pub fn for_covering(
        base: HashFamily,
        parts: usize,
        covering: &Covering,
        c: usize,
    ) -> Result<Self> {
        let mut next = 0;
        let placement = (0..covering.n())
            .map(|r| {
                if covering.contains(r, c) {
                    Placement::Distinct
                } else {
                    next += 1;
                    Placement::Base(next - 1)
                }
            })
            .collect();
        Self::new(base, parts, placement)
    }

    pub fn base(&self) -> &HashFamily {
        &self.base
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn placement(&self) -> &[Placement] {
        &self.placement
    }

    pub fn rows(&self) -> usize {
        self.placement.len()
    }

    pub fn cols(&self) -> usize {
        self.base.cols()
    }

    pub fn distinct_rows(&self) -> usize {
        self.rows() - self.base.rows()
    }

    /// Parts distributed by the realized `n`-row family.
    pub fn realized_parts(&self) -> usize {
        if self.parts >= self.base.rows() {
            self.rows()
        } else {
            self.parts
        }
    }

    /// `v_{r,c}` for each row.
    pub fn widths(&self) -> Vec<usize> {
        self.placement
            .iter()
            .map(|p| match *p {
                Placement::Distinct => self.cols(),
                Placement::Base(i) => self.base.widths()[i],
            })
            .collect()
    }

    pub fn realize(&self) -> HashFamily {
        let k = self.cols();
        let rows = self
            .placement
            .iter()
            .map(|p| match *p {
                Placement::Distinct => (0..k as Symbol).collect(),
                Placement::Base(i) => self.base.row(i).to_vec(),
            })
            .collect();
        HashFamily::new(rows, self.widths()).expect("ingredient rows fit their widths")
    }
}

/// Checks that `base` is fractal at strength `base.rows()` for `parts` parts.
pub fn check_fractal(base: &HashFamily, parts: usize) -> Result<VerifyReport> {
    let t = base.rows();
    let p = parts.min(t).max(1);
    if fractal_enumeration_count(base.cols(), t, p) <= EXHAUSTIVE_BUDGET {
        return Ok(crate::verify::fractal_report(base, p));
    }
    warn!(
        "fractality of a {t}x{} ingredient checked by sampling ({FRACTAL_SAMPLES} samples, seed {FRACTAL_SEED})",
        base.cols()
    );
    sample_verify_fractal(base, t, p, FRACTAL_SAMPLES, FRACTAL_SEED)
}

/// Parts of the composed family: `p` if `p < n - d`, else `n + d`.
pub fn composed_parts(n: usize, d: usize, p: usize) -> usize {
    if p + d < n {
        p
    } else {
        n + d
    }
}

/// Places the realized ingredients side by side with disjoint symbols. The
/// result has `n` rows, strength `n + d` and row widths `sum_c v_{r,c}`.
pub fn blackburn_compose(
    covering: &Covering,
    ingredients: &[FractalIngredient],
    p: usize,
    validation: Validation,
) -> Result<HashFamily> {
    let (n, m, d) = (covering.n(), covering.m(), covering.d());
    if ingredients.len() != m {
        return Err(Error::PlacementMismatch(format!(
            "covering has {m} elements but {} ingredients were given",
            ingredients.len()
        )));
    }
    if p == 0 {
        return Err(Error::invalid("part count must be at least 1"));
    }
    for (c, ing) in ingredients.iter().enumerate() {
        if ing.rows() != n {
            return Err(Error::RowCountMismatch {
                expected: n,
                found: ing.rows(),
            });
        }
        for r in 0..n {
            if covering.contains(r, c) && ing.placement()[r] != Placement::Distinct {
                return Err(Error::PlacementMismatch(format!(
                    "element {c} lies in set {r}, so row {r} of ingredient {c} must be distinct"
                )));
            }
        }
        if ing.realized_parts() < p {
            return Err(Error::PartCountMismatch(format!(
                "ingredient {c} distributes {} parts, {p} requested",
                ing.realized_parts()
            )));
        }
    }
    if validation == Validation::Verify {
        let mut checked: Vec<(&HashFamily, usize)> = Vec::new();
        for (c, ing) in ingredients.iter().enumerate() {
            let key = (ing.base(), ing.parts());
            if checked.contains(&key) {
                continue;
            }
            let report = check_fractal(ing.base(), ing.parts())?;
            if let Some(witness) = report.witness {
                return Err(Error::NotFractal { index: c, witness });
            }
            checked.push(key);
        }
    }
    let blocks: Vec<HashFamily> = ingredients.iter().map(FractalIngredient::realize).collect();
    let out = concat_disjoint(&blocks)?;
    Ok(out.with_claim(n + d, composed_parts(n, d, p)))
}

/// Perfect family with `alpha` more rows, `alpha * k` more columns and
/// strength `n + d + 2 alpha`, from a PHHF(n; kappa, (w...), n + d).
///
/// Each step appends an all-distinct row to the running family and places
/// beside it a block of `k` columns whose earlier rows are all-distinct and
/// whose new row is constant.
pub fn varbb_extend(a: &HashFamily, d: usize, alpha: usize, k: usize) -> Result<HashFamily> {
    if d == 0 || alpha == 0 || k == 0 {
        return Err(Error::invalid(format!(
            "varbb_extend needs d, alpha, k >= 1, got d={d}, alpha={alpha}, k={k}"
        )));
    }
    let n = a.rows();
    match (a.claimed_strength(), a.claimed_parts()) {
        (Some(t), _) if t != n + d => {
            return Err(Error::invalid(format!(
                "input claims strength {t}, expected rows + d = {}",
                n + d
            )))
        }
        (Some(t), Some(p)) if p < t => {
            return Err(Error::invalid("row extension needs a perfect input family"));
        }
        _ => {}
    }
    let mut cur = a.clone().without_claim();
    for _ in 0..alpha {
        let rows = cur.rows();
        let kappa = cur.cols();
        let mut a0 = cur.to_rows();
        a0.push((0..kappa as Symbol).collect());
        let mut w0 = cur.widths().to_vec();
        w0.push(kappa);
        let a0 = HashFamily::new(a0, w0)?;
        let mut a1: Vec<Vec<Symbol>> = vec![(0..k as Symbol).collect(); rows];
        a1.push(vec![0; k]);
        let mut w1 = vec![k; rows];
        w1.push(1);
        let a1 = HashFamily::new(a1, w1)?;
        cur = concat_disjoint(&[a0, a1])?;
    }
    let t = n + d + 2 * alpha;
    Ok(cur.with_claim(t, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::all_d_subsets_covering;
    use crate::verify::verify_phf;

    fn constant(k: usize) -> HashFamily {
        HashFamily::from_rows(vec![vec![0; k]])
            .unwrap()
            .with_claim(1, 1)
    }

    #[test]
    fn ingredient_widths_and_realization() {
        let cov = all_d_subsets_covering(3, 2).unwrap();
        let ing = FractalIngredient::for_covering(constant(2), 1, &cov, 0).unwrap();
        assert_eq!(ing.distinct_rows(), 2);
        assert_eq!(ing.widths(), vec![2, 2, 1]);
        assert_eq!(
            ing.realize().to_rows(),
            vec![vec![0, 1], vec![0, 1], vec![0, 0]]
        );
        assert_eq!(ing.realized_parts(), 3);
    }

    #[test]
    fn bad_placements() {
        let base = constant(2);
        assert!(FractalIngredient::new(base.clone(), 1, vec![Placement::Distinct]).is_err());
        assert!(FractalIngredient::new(
            base.clone(),
            1,
            vec![Placement::Base(0), Placement::Base(0)]
        )
        .is_err());
        let cov = all_d_subsets_covering(3, 2).unwrap();
        let wrong = FractalIngredient::new(
            base.clone(),
            1,
            vec![Placement::Base(0), Placement::Distinct, Placement::Distinct],
        )
        .unwrap();
        let ok: Vec<_> = (0..3)
            .map(|c| FractalIngredient::for_covering(base.clone(), 1, &cov, c).unwrap())
            .collect();
        let mut bad = ok.clone();
        bad[0] = wrong;
        assert!(matches!(
            blackburn_compose(&cov, &bad, 3, Validation::Verify),
            Err(Error::PlacementMismatch(_))
        ));
        assert!(blackburn_compose(&cov, &ok[..2], 3, Validation::Verify).is_err());
    }

    #[test]
    fn compose_all_pairs_of_three() {
        let cov = all_d_subsets_covering(3, 2).unwrap();
        let ings: Vec<_> = (0..3)
            .map(|c| FractalIngredient::for_covering(constant(2), 1, &cov, c).unwrap())
            .collect();
        let b = blackburn_compose(&cov, &ings, 3, Validation::Verify).unwrap();
        assert_eq!((b.rows(), b.cols()), (3, 6));
        assert_eq!(b.widths(), &[5, 5, 5]);
        assert_eq!(b.claimed_strength(), Some(5));
        assert!(verify_phf(&b, 5).unwrap().passed());
    }

    #[test]
    fn non_fractal_ingredient_rejected() {
        let cov = all_d_subsets_covering(3, 1).unwrap();
        let dup = HashFamily::from_rows(vec![vec![0, 0, 1], vec![0, 0, 1]]).unwrap();
        let ings: Vec<_> = (0..3)
            .map(|c| FractalIngredient::for_covering(dup.clone(), 2, &cov, c).unwrap())
            .collect();
        assert!(matches!(
            blackburn_compose(&cov, &ings, 2, Validation::Verify),
            Err(Error::NotFractal { index: 0, .. })
        ));
        assert!(blackburn_compose(&cov, &ings, 2, Validation::Trusted).is_ok());
    }

    #[test]
    fn composed_part_rule() {
        assert_eq!(composed_parts(7, 2, 2), 2);
        assert_eq!(composed_parts(7, 2, 5), 9);
        assert_eq!(composed_parts(4, 2, 1), 1);
    }

    #[test]
    fn varbb_single_and_double_steps() {
        let a = HashFamily::from_rows(vec![vec![0, 1, 2, 2], vec![0, 0, 1, 2]])
            .unwrap()
            .with_claim(3, 3);
        assert!(verify_phf(&a, 3).unwrap().passed());
        let b = varbb_extend(&a, 1, 1, 2).unwrap();
        assert_eq!((b.rows(), b.cols()), (3, 6));
        assert_eq!(b.widths(), &[5, 5, 5]);
        assert!(verify_phf(&b, 5).unwrap().passed());
        let two = varbb_extend(&a, 1, 2, 2).unwrap();
        let stepwise = varbb_extend(&b, 2, 1, 2).unwrap();
        assert_eq!(two, stepwise);
        assert!(varbb_extend(&a, 1, 0, 2).is_err());
        assert!(varbb_extend(&a, 2, 1, 2).is_err());
    }
}
