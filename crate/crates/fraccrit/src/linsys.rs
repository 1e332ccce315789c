//! Linear systems over exact rationals.
//!
//! A [`LinearSystem`] holds equalities `a·x = b`, inequalities `a·x <= b`,
//! and a set of variables constrained nonnegative. It is the shared input
//! shape for the simplex solver and for polytope vertex enumeration, and has
//! a line-oriented debug text format used by failure reports and the
//! `vertices` subcommand.

use crate::rat::Rat;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub var_names: Vec<String>,
    /// Per-variable nonnegativity flag.
    pub nonneg: Vec<bool>,
    /// Rows `coeffs · x = rhs`.
    pub equalities: Vec<(Vec<Rat>, Rat)>,
    /// Rows `coeffs · x <= rhs`.
    pub inequalities: Vec<(Vec<Rat>, Rat)>,
}

impl LinearSystem {
    pub fn new(var_names: Vec<String>) -> LinearSystem {
        let n = var_names.len();
        LinearSystem {
            var_names,
            nonneg: vec![false; n],
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    /// Fresh system with anonymous variable names `x0..x{n-1}`, all nonneg.
    pub fn with_nonneg_vars(n: usize) -> LinearSystem {
        let mut sys = LinearSystem::new((0..n).map(|i| format!("x{}", i)).collect());
        sys.nonneg = vec![true; n];
        sys
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn push_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        assert_eq!(coeffs.len(), self.num_vars());
        self.equalities.push((coeffs, rhs));
    }

    pub fn push_le(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        assert_eq!(coeffs.len(), self.num_vars());
        self.inequalities.push((coeffs, rhs));
    }

    /// Exact check that `x` satisfies every constraint.
    pub fn check_point(&self, x: &[Rat]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        for (v, &nn) in self.nonneg.iter().enumerate() {
            if nn && x[v].is_negative() {
                return false;
            }
        }
        for (coeffs, rhs) in &self.equalities {
            if &dot(coeffs, x) != rhs {
                return false;
            }
        }
        for (coeffs, rhs) in &self.inequalities {
            if &dot(coeffs, x) > rhs {
                return false;
            }
        }
        true
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

impl fmt::Display for LinearSystem {
    /// Debug dump: `vars`, `nonneg`, then one constraint per line with exact
    /// fractions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.var_names.join(" "))?;
        let nn: Vec<&str> = self
            .var_names
            .iter()
            .zip(&self.nonneg)
            .filter(|(_, &b)| b)
            .map(|(s, _)| s.as_str())
            .collect();
        if !nn.is_empty() {
            writeln!(f, "nonneg {}", nn.join(" "))?;
        }
        for (coeffs, rhs) in &self.equalities {
            writeln!(f, "{} = {}", row_terms(&self.var_names, coeffs), rhs)?;
        }
        for (coeffs, rhs) in &self.inequalities {
            writeln!(f, "{} <= {}", row_terms(&self.var_names, coeffs), rhs)?;
        }
        Ok(())
    }
}

fn row_terms(names: &[String], coeffs: &[Rat]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| format!("{} {}", c, n))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[derive(Debug, Error)]
pub enum ParseSystemError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("missing `vars` line")]
    MissingVars,
}

/// Parse the debug dump format back into a system.
pub fn parse_system(text: &str) -> Result<LinearSystem, ParseSystemError> {
    let mut sys: Option<LinearSystem> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let n = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| ParseSystemError::Line(n, msg.to_string());
        if let Some(rest) = line.strip_prefix("vars ") {
            let names: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
            if names.is_empty() {
                return Err(err("no variables"));
            }
            sys = Some(LinearSystem::new(names));
            continue;
        }
        let sys = sys.as_mut().ok_or(ParseSystemError::MissingVars)?;
        if let Some(rest) = line.strip_prefix("nonneg ") {
            for name in rest.split_whitespace() {
                let i = sys
                    .var_names
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| err(&format!("unknown variable `{}`", name)))?;
                sys.nonneg[i] = true;
            }
            continue;
        }
        // Constraint line: terms (op) rhs, with op in {<=, =, >=}.
        let (op, pos) = ["<=", ">=", "="]
            .iter()
            .filter_map(|op| line.find(op).map(|p| (*op, p)))
            .min_by_key(|&(_, p)| p)
            .ok_or_else(|| err("no relation operator"))?;
        let lhs = &line[..pos];
        let rhs_text = line[pos + op.len()..].trim();
        let rhs: Rat = rhs_text
            .parse()
            .map_err(|_| err(&format!("bad rhs `{}`", rhs_text)))?;
        let mut coeffs = vec![Rat::zero(); sys.num_vars()];
        let tokens: Vec<&str> = lhs.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(err("empty constraint"));
        }
        let mut i = 0;
        let mut sign = Rat::one();
        let mut expect_term = true;
        while i < tokens.len() {
            match tokens[i] {
                "+" => {
                    sign = Rat::one();
                    expect_term = true;
                    i += 1;
                }
                "-" => {
                    sign = -Rat::one();
                    expect_term = true;
                    i += 1;
                }
                "0" if tokens.len() == 1 => {
                    i += 1;
                    expect_term = false;
                }
                tok => {
                    if !expect_term {
                        return Err(err(&format!("expected + or - before `{}`", tok)));
                    }
                    let (coef, name) = match tok.parse::<Rat>() {
                        Ok(c) => {
                            i += 1;
                            let name = tokens
                                .get(i)
                                .ok_or_else(|| err("coefficient without variable"))?;
                            (c, *name)
                        }
                        Err(_) => (Rat::one(), tok),
                    };
                    let vi = sys
                        .var_names
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| err(&format!("unknown variable `{}`", name)))?;
                    coeffs[vi] += &(&sign * &coef);
                    i += 1;
                    expect_term = false;
                }
            }
        }
        match op {
            "=" => sys.equalities.push((coeffs, rhs)),
            "<=" => sys.inequalities.push((coeffs, rhs)),
            ">=" => {
                let neg: Vec<Rat> = coeffs.iter().map(|c| -c).collect();
                sys.inequalities.push((neg, -rhs));
            }
            _ => unreachable!(),
        }
    }
    sys.ok_or(ParseSystemError::MissingVars)
}
