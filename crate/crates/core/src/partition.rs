use std::fmt;

use crate::error::{Error, Result};

/// A partition of a set of columns into at most `part_budget` classes.
///
/// Classes are kept sorted internally and ordered by their smallest element,
/// so two partitions of the same support compare equal exactly when they
/// group the columns the same way.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    support: Vec<usize>,
    part_budget: usize,
}

impl Partition {
    /// Empty classes are dropped. Fails if classes overlap or the number of
    /// nonempty classes exceeds `part_budget`.
    pub fn new(classes: Vec<Vec<usize>>, part_budget: usize) -> Result<Self> {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        if classes.len() > part_budget {
            return Err(Error::invalid(format!(
                "{} nonempty classes exceed the budget of {part_budget}",
                classes.len()
            )));
        }
        let mut support: Vec<usize> = classes.iter().flatten().copied().collect();
        support.sort_unstable();
        if support.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("partition classes overlap"));
        }
        classes.sort_by_key(|c| c[0]);
        Ok(Self {
            classes,
            support,
            part_budget,
        })
    }

    /// Builds the partition of a sorted column set described by a
    /// restricted-growth string.
    pub fn from_rgs(support: &[usize], rgs: &[u8], part_budget: usize) -> Self {
        debug_assert_eq!(support.len(), rgs.len());
        let blocks = rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); blocks];
        for (&col, &b) in support.iter().zip(rgs) {
            classes[b as usize].push(col);
        }
        Self {
            classes,
            support: support.to_vec(),
            part_budget,
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn part_budget(&self) -> usize {
        self.part_budget
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class label of each support column, as a restricted-growth string.
    pub fn rgs(&self) -> Vec<u8> {
        self.support
            .iter()
            .map(|col| {
                self.classes
                    .iter()
                    .position(|c| c.binary_search(col).is_ok())
                    .expect("support column belongs to a class") as u8
            })
            .collect()
    }
}

/// `columns=[0,1,2,3] rgs=[0,0,1,2]`
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.support.iter().map(ToString::to_string).collect();
        let rgs: Vec<String> = self.rgs().iter().map(ToString::to_string).collect();
        write!(f, "columns=[{}] rgs=[{}]", cols.join(","), rgs.join(","))
    }
}
