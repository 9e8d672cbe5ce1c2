//! CSV tables with a comment header.

use svm_asymptotics::empirical::ExperimentSummary;

use crate::VERSION;

/// Columns shared by the theory and simulation commands.
pub const SCHEMA: [&str; 13] = [
    "sweep_var",
    "value",
    "rho_th",
    "q0_th",
    "eta_th",
    "err_th",
    "rho_mean",
    "rho_std",
    "norm_mean",
    "norm_std",
    "err_mean",
    "err_std",
    "infeasible_count",
];

#[derive(Debug, Clone, PartialEq)]
pub enum Theory {
    Values { rho: f64, q0: f64, eta: f64, err: f64 },
    /// Hard margin at or beyond the separability threshold.
    NotSeparable,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Simulation {
    Moments(ExperimentSummary),
    AllInfeasible(usize),
}

#[derive(Debug, Clone)]
pub struct Row {
    pub sweep_var: &'static str,
    pub value: f64,
    pub theory: Option<Theory>,
    pub simulation: Option<Simulation>,
    pub extra: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub args: String,
    pub seed: Option<u64>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Table {
    pub fn new(args: &str, seed: Option<u64>, columns: &[&str]) -> Self {
        Table {
            args: args.to_string(),
            seed,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// A table with the shared columns followed by `extra`.
    pub fn with_schema(args: &str, seed: Option<u64>, extra: &[&str]) -> Self {
        let cols: Vec<&str> = SCHEMA.iter().chain(extra).copied().collect();
        Table::new(args, seed, &cols)
    }

    pub fn has_schema(&self) -> bool {
        self.columns.len() >= SCHEMA.len() && self.columns.iter().zip(SCHEMA).all(|(a, b)| a == b)
    }

    pub fn push_raw(&mut self, fields: Vec<String>) {
        assert_eq!(fields.len(), self.columns.len(), "row width");
        self.rows.push(fields);
    }

    pub fn push(&mut self, row: Row) {
        let mut f = vec![row.sweep_var.to_string(), row.value.to_string()];
        match row.theory {
            Some(Theory::Values { rho, q0, eta, err }) => f.extend([rho, q0, eta, err].map(|x| x.to_string())),
            _ => f.extend(std::iter::repeat_n(String::new(), 4)),
        }
        match row.simulation {
            Some(Simulation::Moments(s)) => {
                f.extend(
                    [s.cos_mean, s.cos_std, s.norm_mean, s.norm_std, s.err_mean, s.err_std].map(|x| x.to_string()),
                );
                f.push((s.reps - s.optimal_count).to_string());
            }
            Some(Simulation::AllInfeasible(n)) => {
                f.extend(std::iter::repeat_n(String::new(), 6));
                f.push(n.to_string());
            }
            None => f.extend(std::iter::repeat_n(String::new(), 7)),
        }
        f.extend(row.extra);
        self.push_raw(f);
    }

    /// Column index by name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> String {
        let seed = match self.seed {
            Some(s) => s.to_string(),
            None => "unused".to_string(),
        };
        let mut out = format!("# svm-asym {VERSION}\n# args: {}\n# seed: {seed}\n", self.args);
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_halves_are_empty() {
        let mut t = Table::with_schema("theory-hard", None, &[]);
        t.push(Row {
            sweep_var: "mu",
            value: 1.5,
            theory: Some(Theory::NotSeparable),
            simulation: None,
            extra: Vec::new(),
        });
        let csv = t.to_csv();
        let last = csv.lines().last().unwrap();
        assert_eq!(last, "mu,1.5,,,,,,,,,,,");
        assert!(csv.contains("# seed: unused\n"));
        assert!(t.has_schema());
    }

    #[test]
    fn all_infeasible_keeps_the_count() {
        let mut t = Table::with_schema("simulate", Some(3), &[]);
        t.push(Row {
            sweep_var: "delta",
            value: 4.0,
            theory: None,
            simulation: Some(Simulation::AllInfeasible(10)),
            extra: Vec::new(),
        });
        assert!(t.to_csv().ends_with("delta,4,,,,,,,,,,,10\n"));
    }

    #[test]
    #[should_panic(expected = "row width")]
    fn rejects_ragged_rows() {
        Table::new("x", None, &["a", "b"]).push_raw(vec!["1".into()]);
    }
}
