//! Sidon sets and B_k sets with a certifier.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// Ascending positive integers whose ordered `k`-fold sums repeat at most `k!` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SidonSet {
    elements: Vec<i64>,
    order_k: usize,
}

impl SidonSet {
    /// Certifies `elements` before accepting them.
    pub fn new(mut elements: Vec<i64>, order_k: usize) -> Result<Self> {
        elements.sort_unstable();
        if order_k < 2 {
            return Err(Error::InvalidParameter("order must be at least 2".into()));
        }
        if elements.first().is_some_and(|&e| e < 1) || elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("need distinct positive elements".into()));
        }
        if !certify_bk(&elements, order_k) {
            return Err(Error::InvalidParameter(format!(
                "not a B_{order_k} set: {elements:?}"
            )));
        }
        Ok(Self { elements, order_k })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.order_k
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Checks the `B_k` property by summing, over every `k`-multiset, its number of orderings.
pub fn certify_bk(elements: &[i64], k: usize) -> bool {
    let limit = factorial(k);
    let mut counts: HashMap<i64, u64> = HashMap::new();
    let mut pick = Vec::with_capacity(k);
    let mut ok = true;
    multisets(elements, k, 0, 0, &mut pick, &mut |sum, pick| {
        let c = counts.entry(sum).or_insert(0);
        *c += orderings(pick, limit);
        if *c > limit {
            ok = false;
        }
        ok
    });
    ok
}

fn orderings(pick: &[usize], k_fact: u64) -> u64 {
    let mut denom = 1;
    let mut run = 1;
    for w in pick.windows(2) {
        if w[0] == w[1] {
            run += 1;
            denom *= run;
        } else {
            run = 1;
        }
    }
    k_fact / denom
}

/// Visits index multisets `i_1 ≤ … ≤ i_k`; stops early once `visit` returns false.
fn multisets(
    elements: &[i64],
    k: usize,
    start: usize,
    sum: i64,
    pick: &mut Vec<usize>,
    visit: &mut impl FnMut(i64, &[usize]) -> bool,
) -> bool {
    if pick.len() == k {
        return visit(sum, pick);
    }
    for i in start..elements.len() {
        pick.push(i);
        let more = multisets(elements, k, i, sum + elements[i], pick, visit);
        pick.pop();
        if !more {
            return false;
        }
    }
    true
}

fn smallest_prime_at_least(n: usize) -> usize {
    let mut p = n.max(2);
    while !(2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        p += 1;
    }
    p
}

/// The `n` smallest elements of `{2pi + (i² mod p) : 1 ≤ i ≤ p}` for the least prime `p ≥ n`.
pub fn sidon_set(n: usize) -> SidonSet {
    let p = smallest_prime_at_least(n) as i64;
    let mut all: Vec<i64> = (1..=p).map(|i| 2 * p * i + (i * i) % p).collect();
    all.sort_unstable();
    all.truncate(n);
    SidonSet::new(all, 2).unwrap_or_else(|_| bk_set(n, 2))
}

fn binomial(n: usize, r: usize) -> u64 {
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Greedy `B_k` set: each next element is the smallest that keeps every
/// `t`-fold power, `t ≤ k`, within `t!`, so some larger element always fits.
pub fn bk_set(n: usize, k: usize) -> SidonSet {
    assert!(k >= 2, "order must be at least 2");
    // powers[t][s]: ordered t-tuples of chosen elements summing to s
    let mut powers: Vec<HashMap<i64, u64>> = vec![HashMap::new(); k + 1];
    powers[0].insert(0, 1);
    let mut chosen: Vec<i64> = Vec::with_capacity(n);
    let mut c = 0;
    while chosen.len() < n {
        c += 1;
        let mut added: Vec<HashMap<i64, u64>> = vec![HashMap::new(); k + 1];
        let mut fits = true;
        'orders: for t in 1..=k {
            let limit = factorial(t);
            for j in 1..=t {
                let w = binomial(t, j);
                for (&s, &cnt) in &powers[t - j] {
                    *added[t].entry(s + j as i64 * c).or_insert(0) += w * cnt;
                }
            }
            for (s, a) in &added[t] {
                if powers[t].get(s).copied().unwrap_or(0) + a > limit {
                    fits = false;
                    break 'orders;
                }
            }
        }
        if !fits {
            continue;
        }
        for (t, extra) in added.into_iter().enumerate().skip(1) {
            for (s, a) in extra {
                *powers[t].entry(s).or_insert(0) += a;
            }
        }
        chosen.push(c);
    }
    SidonSet::new(chosen, k).expect("greedy output satisfies the certifier")
}
