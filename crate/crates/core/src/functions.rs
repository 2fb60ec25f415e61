//! Eventually periodic functions `N_{>0} -> N`, the operations
//! `(f ⋆ g)(t) = f(t) + g(t) - 1` and `overline f = f - 1`, and a planner that
//! writes any positive eventually periodic function as a ⋆/overline
//! expression in the basic families.

use std::fmt;

use num_integer::Integer;

use crate::depth::{symbolic_depths, DepthOptions};
use crate::error::{Error, Result};
use crate::families;
use crate::monomial::{Decomposition, MonomialIdeal, PrimaryComponent, Ring, VarSet};

/// `f(t) = prefix[t-1]` for `t <= |prefix|`, then `period` repeats.
/// Always kept canonical: shortest period, then shortest prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepFunction {
    prefix: Vec<u32>,
    period: Vec<u32>,
}

impl StepFunction {
    /// A positive function.
    pub fn new(prefix: Vec<u32>, period: Vec<u32>) -> Result<Self> {
        let f = Self::sequence(prefix, period)?;
        match f.min() {
            0 => Err(Error::NonPositive(0)),
            _ => Ok(f),
        }
    }

    /// Like [`StepFunction::new`] but zero values are allowed.
    pub fn sequence(prefix: Vec<u32>, period: Vec<u32>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Parse("the period must be nonempty".into()));
        }
        Ok(Self::canonical(prefix, period))
    }

    pub fn constant(c: u32) -> Result<Self> {
        Self::new(Vec::new(), vec![c])
    }

    fn canonical(mut prefix: Vec<u32>, mut period: Vec<u32>) -> Self {
        let len = period.len();
        if let Some(d) = (1..=len).find(|&d| len.is_multiple_of(d) && (0..len).all(|i| period[i] == period[i % d])) {
            period.truncate(d);
        }
        while let Some(&last) = prefix.last() {
            if last != *period.last().expect("nonempty") {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        StepFunction { prefix, period }
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    /// `f(t)` for `t >= 1`.
    pub fn value(&self, t: u32) -> u32 {
        assert!(t >= 1, "functions are defined for t >= 1");
        let t = t as usize - 1;
        if t < self.prefix.len() {
            self.prefix[t]
        } else {
            self.period[(t - self.prefix.len()) % self.period.len()]
        }
    }

    /// `f(1), .., f(t_max)`.
    pub fn values(&self, t_max: u32) -> Vec<u32> {
        (1..=t_max).map(|t| self.value(t)).collect()
    }

    pub fn min(&self) -> u32 {
        self.prefix.iter().chain(&self.period).copied().min().expect("nonempty")
    }

    pub fn max(&self) -> u32 {
        self.prefix.iter().chain(&self.period).copied().max().expect("nonempty")
    }

    /// Enough arguments to see every value and one full period twice.
    pub fn horizon(&self) -> u32 {
        (self.prefix.len() + 2 * self.period.len()) as u32
    }

    /// Applies `op` pointwise, with the combined prefix and period.
    fn zip_with(&self, other: &StepFunction, op: impl Fn(u32, u32) -> u32) -> StepFunction {
        let pre = self.prefix.len().max(other.prefix.len());
        let per = self.period.len().lcm(&other.period.len());
        let values: Vec<u32> = (1..=(pre + per) as u32).map(|t| op(self.value(t), other.value(t))).collect();
        Self::canonical(values[..pre].to_vec(), values[pre..].to_vec())
    }

    fn map(&self, op: impl Fn(u32) -> u32) -> StepFunction {
        Self::canonical(
            self.prefix.iter().map(|&v| op(v)).collect(),
            self.period.iter().map(|&v| op(v)).collect(),
        )
    }

    /// Parses `prefix;period`, e.g. `2;1,2` for `2, 1, 2, 1, 2, ..`. Without a
    /// semicolon the whole list is the period.
    pub fn parse(text: &str) -> Result<Self> {
        let numbers = |part: &str| -> Result<Vec<u32>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("expected a non-negative integer, found {:?}", s.trim())))
                })
                .collect()
        };
        let (prefix, period) = match text.split_once(';') {
            Some((p, q)) => (numbers(p)?, numbers(q)?),
            None => (Vec::new(), numbers(text)?),
        };
        if period.is_empty() {
            return Err(Error::Parse("the period must be nonempty".into()));
        }
        if let Some(&bad) = prefix.iter().chain(&period).find(|&&v| v == 0) {
            return Err(Error::NonPositive(bad));
        }
        Self::new(prefix, period)
    }
}

impl fmt::Display for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.prefix), join(&self.period))
    }
}

/// `f ⋆ g = f + g - 1`.
pub fn star(f: &StepFunction, g: &StepFunction) -> StepFunction {
    f.zip_with(g, |a, b| (a + b).saturating_sub(1))
}

/// `f - 1`, defined when `f >= 2` everywhere.
pub fn overline(f: &StepFunction) -> Result<StepFunction> {
    match f.min() {
        m if m < 2 => Err(Error::OverlineBelowTwo(m)),
        _ => Ok(f.map(|v| v - 1)),
    }
}

/// An expression over the basic functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    /// `1` for `t < m`, `2` from `t = m` on.
    A(u32),
    /// `2` at `t = m`, else `1`.
    B(u32),
    /// `2` when `t ≡ d (mod m)`, else `1`.
    C(u32, u32),
    Const(u32),
    Star(Box<Recipe>, Box<Recipe>),
    Overline(Box<Recipe>),
}

impl Recipe {
    pub fn star(left: Recipe, right: Recipe) -> Recipe {
        Recipe::Star(Box::new(left), Box::new(right))
    }

    pub fn overline(child: Recipe) -> Recipe {
        Recipe::Overline(Box::new(child))
    }

    /// Left fold with `⋆`; the empty fold is `Const(1)`.
    pub fn star_all(parts: Vec<Recipe>) -> Recipe {
        parts.into_iter().reduce(Recipe::star).unwrap_or(Recipe::Const(1))
    }

    pub fn is_base(&self) -> bool {
        !matches!(self, Recipe::Star(..) | Recipe::Overline(..))
    }

    /// Every subtree in pre-order.
    pub fn nodes(&self) -> Vec<&Recipe> {
        let mut out = vec![self];
        match self {
            Recipe::Star(l, r) => {
                out.extend(l.nodes());
                out.extend(r.nodes());
            }
            Recipe::Overline(c) => out.extend(c.nodes()),
            _ => {}
        }
        out
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::A(m) => write!(f, "(A {m})"),
            Recipe::B(m) => write!(f, "(B {m})"),
            Recipe::C(m, d) => write!(f, "(C {m} {d})"),
            Recipe::Const(c) => write!(f, "(const {c})"),
            Recipe::Star(l, r) => write!(f, "(star {l} {r})"),
            Recipe::Overline(c) => write!(f, "(overline {c})"),
        }
    }
}

/// Values of a basic function.
pub fn base_eval(node: &Recipe) -> Result<StepFunction> {
    match *node {
        Recipe::A(m) if m >= 2 => StepFunction::new(vec![1; m as usize - 1], vec![2]),
        Recipe::B(m) if m >= 1 => {
            let mut prefix = vec![1; m as usize];
            prefix[m as usize - 1] = 2;
            StepFunction::new(prefix, vec![1])
        }
        Recipe::C(m, d) if m >= 2 && d < m => {
            // Period starts at t = 1, so position k holds t ≡ k + 1.
            let period = (0..m).map(|k| if (k + 1) % m == d { 2 } else { 1 }).collect();
            StepFunction::new(Vec::new(), period)
        }
        Recipe::Const(c) if c >= 1 => StepFunction::constant(c),
        Recipe::Star(..) | Recipe::Overline(..) => {
            Err(Error::ParameterOutOfRange("not a basic function".into()))
        }
        _ => Err(Error::ParameterOutOfRange(format!("parameters out of range in {node}"))),
    }
}

pub fn evaluate(recipe: &Recipe) -> Result<StepFunction> {
    match recipe {
        Recipe::Star(l, r) => Ok(star(&evaluate(l)?, &evaluate(r)?)),
        Recipe::Overline(c) => overline(&evaluate(c)?),
        base => base_eval(base),
    }
}

/// Writes `f` as a recipe. The function `f - 1` is cut into 0/1 layers
/// `[f - 1 >= j]`; each layer `φ` gets a recipe evaluating to `1 + φ`, and
/// the layers are combined with `⋆`.
pub fn decompose(f: &StepFunction) -> Result<Recipe> {
    if f.min() == 0 {
        return Err(Error::NonPositive(0));
    }
    let psi = f.map(|v| v - 1);
    let layers = (1..=psi.max())
        .map(|j| psi.map(|v| u32::from(v >= j)))
        .filter(|layer| layer.max() > 0)
        .map(|layer| lift_layer(&layer))
        .collect();
    Ok(Recipe::star_all(layers))
}

/// A recipe evaluating to `1 + layer` for a 0/1 function.
fn lift_layer(layer: &StepFunction) -> Recipe {
    if let Some(direct) = direct_lift(layer) {
        return direct;
    }
    let prefix = layer.prefix().len();
    let c = layer.period().len();
    // s is a multiple of the period length beyond the prefix, large enough to
    // contain a 1.
    let mut s = prefix.div_ceil(c).max(1) * c;
    while !(1..=s as u32).any(|t| layer.value(t) == 1) {
        s += c;
    }
    let s32 = s as u32;
    // layer = φ1 + φ2 + φ3 - 1 with φ1(t) = layer(t + s) periodic from 1,
    // φ2 = 1 except where φ1 = 1 up to s, φ3 = layer restricted to t <= s.
    let phi1 = |t: u32| layer.value(t + s32);
    let mut pieces = Vec::new();
    if c == 1 {
        if phi1(1) == 1 {
            pieces.push(Recipe::Const(2));
        }
    } else {
        for r in 1..=c as u32 {
            if phi1(r) == 1 {
                pieces.push(Recipe::C(c as u32, r % c as u32));
            }
        }
    }
    pieces.push(Recipe::A(s32 + 1));
    pieces.extend((1..=s32).filter(|&t| phi1(t) == 0).map(Recipe::B));
    pieces.extend((1..=s32).filter(|&t| layer.value(t) == 1).map(Recipe::B));
    Recipe::overline(Recipe::star_all(pieces))
}

/// Layers that already are `[t >= m]`, `[t = m]` or `[t ≡ d mod m]`.
fn direct_lift(layer: &StepFunction) -> Option<Recipe> {
    let (prefix, period) = (layer.prefix(), layer.period());
    let zeros = |v: &[u32]| v.iter().all(|&x| x == 0);
    if period == [1] && zeros(prefix) {
        let m = prefix.len() as u32 + 1;
        return Some(if m == 1 { Recipe::Const(2) } else { Recipe::A(m) });
    }
    if period == [0] && prefix.last() == Some(&1) && zeros(&prefix[..prefix.len() - 1]) {
        return Some(Recipe::B(prefix.len() as u32));
    }
    if prefix.is_empty() && period.iter().filter(|&&v| v == 1).count() == 1 {
        let c = period.len() as u32;
        let pos = period.iter().position(|&v| v == 1).expect("one entry") as u32 + 1;
        return Some(if c == 1 { Recipe::Const(2) } else { Recipe::C(c, pos % c) });
    }
    None
}

/// `n - f(t) - 1` pointwise: projective dimensions of `I^(t)` in `n`
/// variables when `f` is the depth function of `R/I^(t)`.
pub fn pd_report(recipe: &Recipe, n_ambient: u32) -> Result<StepFunction> {
    let f = evaluate(recipe)?;
    if n_ambient < f.max() + 1 {
        return Err(Error::ParameterOutOfRange(format!(
            "{n_ambient} variables cannot carry depth {}",
            f.max()
        )));
    }
    StepFunction::sequence(
        f.prefix().iter().map(|&v| n_ambient - v - 1).collect(),
        f.period().iter().map(|&v| n_ambient - v - 1).collect(),
    )
}

/// How a recipe node is realized by an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// A concrete ideal with the node's function as symbolic depth function.
    Family { name: String, decomposition: Decomposition },
    /// The product of the children's ideals on disjoint variables, whose
    /// depth function is `f + g + 1`, followed by two hyperplane sections
    /// that are not computed. `product` is absent when a child is itself
    /// only known symbolically.
    Product { product: Option<Decomposition>, product_function: StepFunction },
    /// One hyperplane section of the child's ideal, not computed.
    Section,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub recipe: Recipe,
    pub target: StepFunction,
    pub step: Step,
    pub children: Vec<Realization>,
}

impl Realization {
    /// Whether the target itself is the depth function of a concrete ideal
    /// built here.
    pub fn verifiable(&self) -> bool {
        matches!(self.step, Step::Family { .. })
    }

    /// The concrete ideal whose depth function can be checked, with that
    /// function: the family ideal itself, or the product before sections.
    pub fn checkable(&self) -> Option<(&Decomposition, &StepFunction)> {
        match &self.step {
            Step::Family { decomposition, .. } => Some((decomposition, &self.target)),
            Step::Product { product: Some(p), product_function } => Some((p, product_function)),
            _ => None,
        }
    }

    fn concrete(&self) -> Option<&Decomposition> {
        match &self.step {
            Step::Family { decomposition, .. } => Some(decomposition),
            _ => None,
        }
    }
}

/// The ideal `(x_1)` in `c + 1` variables, with constant depth `c`.
pub fn constant_ideal(c: u32) -> Result<Decomposition> {
    let ring = Ring::standard(c as usize + 1)?;
    let comp = PrimaryComponent::new(VarSet::singleton(0), MonomialIdeal::prime(&ring, VarSet::singleton(0)))?;
    Decomposition::new(&ring, vec![comp])
}

/// Builds the realization tree of a recipe.
pub fn realize(recipe: &Recipe) -> Result<Realization> {
    let target = evaluate(recipe)?;
    let family = |name: String, decomposition: Decomposition| Realization {
        recipe: recipe.clone(),
        target: target.clone(),
        step: Step::Family { name, decomposition },
        children: Vec::new(),
    };
    Ok(match recipe {
        Recipe::A(m) => family(format!("typeA m={m}"), families::assemble(&families::type_a(*m)?)?),
        Recipe::B(m) => family(format!("typeB m={m}"), families::assemble(&families::type_b(*m)?)?),
        Recipe::C(m, d) => {
            family(format!("typeC m={m} d={d}"), families::assemble(&families::type_c(*m, *d)?)?)
        }
        Recipe::Const(c) => family(format!("principal c={c}"), constant_ideal(*c)?),
        Recipe::Star(l, r) => {
            let left = realize(l)?;
            let right = realize(r)?;
            let product = match (left.concrete(), right.concrete()) {
                (Some(a), Some(b)) => Some(a.product_disjoint(b)?),
                _ => None,
            };
            let product_function = left.target.zip_with(&right.target, |a, b| a + b + 1);
            Realization {
                recipe: recipe.clone(),
                target,
                step: Step::Product { product, product_function },
                children: vec![left, right],
            }
        }
        Recipe::Overline(c) => Realization {
            recipe: recipe.clone(),
            target,
            step: Step::Section,
            children: vec![realize(c)?],
        },
    })
}

/// Runs the depth engine on a checkable node for `t = 1..=t_max`; returns the
/// computed values and whether they match.
pub fn check_node(node: &Realization, t_max: u32, options: DepthOptions) -> Result<Option<(Vec<u32>, bool)>> {
    let Some((decomposition, expected)) = node.checkable() else {
        return Ok(None);
    };
    let computed: Vec<u32> = symbolic_depths(decomposition, t_max, options)?
        .into_iter()
        .map(|d| d as u32)
        .collect();
    let matches = computed == expected.values(t_max);
    Ok(Some((computed, matches)))
}
