use crate::diffop::{compose_all, DiffOp, Sign, Superpotential};
use crate::error::{Error, Result};
use crate::exactpoly::{pseudo_hermite_table, real_root_count, RootInterval};

use super::extension::{seed_wronskian, ExtensionSpec};

/// First-order factors `d/dx + W_i` of a supercharge chain, in the order they act.
#[derive(Clone, Debug)]
pub struct Chain {
    pub superpotentials: Vec<Superpotential>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.superpotentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.superpotentials.is_empty()
    }

    /// `d/dx + W_i` for each step.
    pub fn factors(&self) -> Vec<DiffOp> {
        self.superpotentials
            .iter()
            .map(|w| w.first_order(Sign::Plus))
            .collect()
    }

    /// `A_n ... A_2 A_1`.
    pub fn operator(&self) -> DiffOp {
        let rev: Vec<DiffOp> = self.factors().into_iter().rev().collect();
        compose_all(&rev)
    }

    /// `A_1† A_2† ... A_n†` with `A_i† = -d/dx + W_i`.
    pub fn adjoint_operator(&self) -> DiffOp {
        let ops: Vec<DiffOp> = self
            .superpotentials
            .iter()
            .map(|w| w.first_order(Sign::Minus))
            .collect();
        compose_all(&ops)
    }
}

/// State-adding chain together with the regularity of every intermediate potential.
#[derive(Clone, Debug)]
pub struct AddingChain {
    pub seeds: Vec<i64>,
    pub chain: Chain,
    /// `true` when the Wronskian of the first `i+1` seeds has no real zero.
    pub intermediate_regular: Vec<bool>,
}

/// Darboux-Crum chain adding the seeds `φ_m = 𝓗_m e^{x²/2}` in increasing order.
pub fn state_adding_chain(spec: &ExtensionSpec) -> Result<AddingChain> {
    state_adding_chain_ordered(spec, spec.ms())
}

/// Same, adding the seeds in the given order (a permutation of the spec).
///
/// With `W_i` the Wronskian of the first `i` seeds, step `i` uses
/// `W^{(i)} = -x - W_i'/W_i + W_{i-1}'/W_{i-1}`. Singular intermediate potentials
/// are reported; only a singular final potential is an error.
pub fn state_adding_chain_ordered(spec: &ExtensionSpec, order: &[i64]) -> Result<AddingChain> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != spec.ms() {
        return Err(Error::InvalidSpec(format!(
            "adding order {order:?} is not a permutation of {spec}"
        )));
    }
    let mut sups = Vec::with_capacity(order.len());
    let mut regular = Vec::with_capacity(order.len());
    let mut prev = seed_wronskian(&[]);
    for i in 1..=order.len() {
        let cur = seed_wronskian(&order[..i]);
        let w = Superpotential::x_times(-1)
            .with_log(-1, &cur)
            .with_log(1, &prev);
        regular.push(cur.is_constant() || real_root_count(&cur, &RootInterval::AllReals)? == 0);
        sups.push(w);
        prev = cur;
    }
    if regular.last() == Some(&false) {
        return Err(Error::SingularExtension(spec.ms().to_vec()));
    }
    Ok(AddingChain {
        seeds: order.to_vec(),
        chain: Chain {
            superpotentials: sups,
        },
        intermediate_regular: regular,
    })
}

/// `x + 𝓗'_{i-1}/𝓗_{i-1} - 𝓗'_i/𝓗_i`.
pub fn deleting_superpotential(i: usize) -> Superpotential {
    let table = pseudo_hermite_table(i);
    Superpotential::x_times(1)
        .with_log(1, &table[i - 1])
        .with_log(-1, &table[i])
}

/// Krein-Adler chain deleting the first `m1` excited oscillator states.
pub fn state_deleting_chain(m1: i64) -> Result<Chain> {
    if m1 < 2 || m1 % 2 != 0 {
        return Err(Error::InvalidIndex(format!(
            "state deletion needs an even m1 >= 2, got {m1}"
        )));
    }
    Ok(Chain {
        superpotentials: (1..=m1 as usize).map(deleting_superpotential).collect(),
    })
}
