//! Gnuplot scripts for the emitted tables.

use std::path::Path;

use crate::table::Table;

/// Script that renders `csv` (written from `table`) to a PNG next to it.
pub fn gnuplot_script(table: &Table, csv: &Path) -> String {
    let data = csv.display().to_string();
    let png = csv.with_extension("png").display().to_string();
    let mut s = String::new();
    s.push_str("set datafile separator ','\n");
    s.push_str("set datafile commentschars '#'\n");
    s.push_str("set terminal pngcairo size 1500,450\n");
    s.push_str(&format!("set output '{png}'\n"));
    s.push_str("set key top left\n");
    s.push_str("set grid\n");
    if table.has_schema() {
        let sweep = table.rows.first().map(|r| r[0].clone()).unwrap_or_else(|| "value".into());
        s.push_str("set multiplot layout 1,3\n");
        for (label, th, mean, std) in [
            ("cos angle", "rho_th", "rho_mean", "rho_std"),
            ("weight norm", "q0_th", "norm_mean", "norm_std"),
            ("total error", "err_th", "err_mean", "err_std"),
        ] {
            let (t, m, d) = (col(table, th), col(table, mean), col(table, std));
            s.push_str(&format!("set xlabel '{sweep}'\nset ylabel '{label}'\n"));
            s.push_str(&format!(
                "plot '{data}' skip 4 using 2:{t} with lines title 'theory', \\\n     '{data}' skip 4 using 2:{m}:{d} with yerrorbars title 'simulation'\n"
            ));
        }
        s.push_str("unset multiplot\n");
    } else {
        s.push_str("set logscale y\n");
        s.push_str(&format!("set xlabel '{}'\nset ylabel '{}'\n", table.columns[0], table.columns[1]));
        s.push_str(&format!("plot '{data}' skip 4 using 1:2 with lines title '{}'\n", table.columns[1]));
    }
    s
}

fn col(table: &Table, name: &str) -> usize {
    table.column(name).map(|i| i + 1).unwrap_or(2)
}
