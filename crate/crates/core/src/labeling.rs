//! Label sets and their text forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which integers a labeling may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Positive,
    Integral,
}

/// A finite set of distinct integer labels, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<i64>,
    domain: Domain,
}

impl Labeling {
    pub fn new(mut labels: Vec<i64>, domain: Domain) -> Result<Self> {
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidLabeling(format!("duplicate label {}", w[0])));
        }
        if domain == Domain::Positive {
            if let Some(&l) = labels.first().filter(|&&l| l < 1) {
                return Err(Error::InvalidLabeling(format!(
                    "label {l} is not positive"
                )));
            }
        }
        Ok(Self { labels, domain })
    }

    /// Positive when every label is at least 1, integral otherwise.
    pub fn infer(labels: Vec<i64>) -> Result<Self> {
        let domain = if labels.iter().all(|&l| l >= 1) {
            Domain::Positive
        } else {
            Domain::Integral
        };
        Self::new(labels, domain)
    }

    pub fn positive(labels: Vec<i64>) -> Result<Self> {
        Self::new(labels, Domain::Positive)
    }

    pub fn integral(labels: Vec<i64>) -> Result<Self> {
        Self::new(labels, Domain::Integral)
    }

    pub(crate) fn from_sorted_unchecked(labels: Vec<i64>, domain: Domain) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        Self { labels, domain }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.labels.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.labels.last().copied()
    }

    pub fn contains(&self, label: i64) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    /// `max - min`, or 0 for an empty set.
    pub fn range(&self) -> i64 {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiplies every label by `c`, failing on overflow or a domain violation.
    pub fn scaled(&self, c: i64) -> Result<Self> {
        let labels = self
            .labels
            .iter()
            .map(|&l| l.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels, self.domain)
    }

    /// The labeling `-L`, always integral.
    pub fn negated(&self) -> Self {
        let labels = self.labels.iter().rev().map(|&l| -l).collect();
        Self::from_sorted_unchecked(labels, Domain::Integral)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.labels).expect("integer list serializes")
    }
}

/// Comma-separated, no spaces.
impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Accepts `1,2,3` or `[1,2,3]`; the domain is inferred.
impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let labels: Vec<i64> = if s.starts_with('[') {
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?
        } else if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::infer(labels)
    }
}

impl Serialize for Labeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<i64>::deserialize(d)?;
        Self::infer(labels).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_rejects_duplicates() {
        let l = Labeling::positive(vec![4, 1, 3, 2]).unwrap();
        assert_eq!(l.labels(), &[1, 2, 3, 4]);
        assert!(Labeling::positive(vec![1, 1]).is_err());
        assert!(Labeling::positive(vec![0, 1]).is_err());
        assert!(Labeling::integral(vec![0, -1]).is_ok());
    }

    #[test]
    fn range_examples() {
        assert_eq!(Labeling::positive(vec![1, 2, 3, 4]).unwrap().range(), 3);
        assert_eq!(Labeling::positive(vec![5]).unwrap().range(), 0);
        assert_eq!(Labeling::integral(vec![-3, -2, -1, 1, 2]).unwrap().range(), 5);
    }

    #[test]
    fn text_forms_round_trip() {
        let l: Labeling = "-3,-2,-1,1,2".parse().unwrap();
        assert_eq!(l.domain(), Domain::Integral);
        assert_eq!(l.to_string(), "-3,-2,-1,1,2");
        let j: Labeling = l.to_json().parse().unwrap();
        assert_eq!(j, l);
        let p: Labeling = " 4, 1 ,2".parse().unwrap();
        assert_eq!(p.to_string(), "1,2,4");
        assert!("1,x".parse::<Labeling>().is_err());
    }

    #[test]
    fn negation_reverses_order() {
        let l = Labeling::positive(vec![1, 2, 5]).unwrap();
        assert_eq!(l.negated().labels(), &[-5, -2, -1]);
    }
}
