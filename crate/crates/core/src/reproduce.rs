//! One deterministic report covering every published table and check.

use serde::Serialize;

use crate::axioms::{bergstra_vdpol_suite, guzman_squier_suite, CheckReport};
use crate::error::Error;
use crate::logic::{
    check_ite_decomposition, compare_golden, golden, truth_table, tuples, Arity, Connective,
    GoldenComparison, IteReport, Style, TruthTable,
};
use crate::prop::{russell_demo, RussellReport};

#[derive(Clone, Debug, Serialize)]
pub struct Reproduction {
    pub tables: Vec<(TruthTable, GoldenComparison)>,
    /// Implication at arities 4 and 5 against `~x \/ y`.
    pub implication_agrees: bool,
    pub guzman_squier: CheckReport,
    pub bergstra_vdpol: CheckReport,
    pub ite: IteReport,
    pub russell: RussellReport,
}

impl Reproduction {
    pub fn goldens_pass(&self) -> bool {
        self.tables.iter().all(|(_, g)| g.passed())
    }

    pub fn passed(&self) -> bool {
        self.goldens_pass()
            && self.implication_agrees
            && self.guzman_squier.passed()
            && self.bergstra_vdpol.passed()
            && self.ite.all_agree()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        for (table, g) in &self.tables {
            out.push_str(&format!(
                "== {} logic, {} ({} style)\n",
                logic_name(table.arity),
                table.connective.name(),
                table.style
            ));
            out.push_str(&table.render());
            out.push_str(&format!("golden: {} cells match", g.matched));
            for c in &g.mismatches {
                out.push_str(&format!(
                    "; MISMATCH at {:?}: printed {}, computed {}",
                    c.inputs, c.printed, c.computed
                ));
            }
            for c in &g.flagged {
                out.push_str(&format!(
                    "; flagged cell {:?} printed {} read as {}, computed {}",
                    c.inputs,
                    c.printed,
                    c.reading.map_or("?".to_string(), |r| r.to_string()),
                    c.computed
                ));
            }
            out.push_str(&format!(" -> {}\n\n", verdict(g.passed())));
        }
        out.push_str(&format!(
            "== implication versus ~x \\/ y at arities 4 and 5 -> {}\n\n",
            verdict(self.implication_agrees)
        ));
        out.push_str("== ");
        out.push_str(&self.guzman_squier.render());
        out.push('\n');
        out.push_str("== ");
        out.push_str(&self.bergstra_vdpol.render());
        out.push('\n');
        out.push_str("== if B0 then B1 else B2  versus  (B0 /\\ B1) \\/ (~B0 /\\ B2)\n");
        out.push_str(&self.ite.render());
        out.push('\n');
        out.push_str("== Russell's paradox\n");
        out.push_str(&self.russell.render());
        out.push('\n');
        out.push_str(&format!("overall: {}\n", verdict(self.passed())));
        out
    }
}

fn logic_name(arity: Arity) -> &'static str {
    match arity {
        Arity::Two => "two-valued",
        Arity::Three => "three-valued",
        Arity::Four => "four-valued",
        Arity::Five => "five-valued",
    }
}

const CONNECTIVES: [Connective; 4] = [
    Connective::Neg,
    Connective::Conj,
    Connective::Disj,
    Connective::Impl,
];

fn implication_agrees(fuel: usize) -> Result<bool, Error> {
    for arity in [Arity::Four, Arity::Five] {
        let imp = truth_table(Connective::Impl, arity, Style::Church, fuel)?;
        let neg = truth_table(Connective::Neg, arity, Style::Church, fuel)?;
        let or = truth_table(Connective::Disj, arity, Style::Church, fuel)?;
        for xy in tuples(arity.values(), 2) {
            let nx = neg.get(&xy[..1]).expect("total table");
            if imp.get(&xy) != or.get(&[nx, xy[1]]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Computes everything in Church style. Only tables with a published
/// counterpart are included.
pub fn reproduce(fuel: usize) -> Result<Reproduction, Error> {
    let mut tables = Vec::new();
    for arity in [Arity::Two, Arity::Three, Arity::Four, Arity::Five] {
        for c in CONNECTIVES {
            if golden::table(c, arity).is_none() {
                continue;
            }
            let t = truth_table(c, arity, Style::Church, fuel)?;
            let g = compare_golden(&t).expect("golden table exists");
            tables.push((t, g));
        }
    }
    Ok(Reproduction {
        tables,
        implication_agrees: implication_agrees(fuel)?,
        guzman_squier: guzman_squier_suite(Style::Church, fuel)?,
        bergstra_vdpol: bergstra_vdpol_suite(Style::Church, fuel)?,
        ite: check_ite_decomposition(Style::Church, fuel)?,
        russell: russell_demo(6, fuel),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::DEFAULT_FUEL;

    #[test]
    fn everything_passes() {
        let r = reproduce(DEFAULT_FUEL).unwrap();
        assert_eq!(r.tables.len(), 14);
        assert!(r.passed(), "{}", r.render());
        assert!(r.render().ends_with("overall: PASS\n"));
    }
}
