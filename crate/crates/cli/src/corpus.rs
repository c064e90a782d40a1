//! Every structure reachable from the named fixtures, as documents.

use doublelift::examples::{fixture, length_two, Fixture, LIFT_FIXTURES};

use crate::error::CliError;
use crate::format::{Document, DoubleDoc};

/// `(label, document)` pairs in a fixed order.
pub fn corpus() -> Result<Vec<(String, Document)>, CliError> {
    let mut out = Vec::new();
    for name in LIFT_FIXTURES {
        let fx = fixture(name)?;
        let l = fx.lift().expect("lift fixture");
        out.push((format!("{name}/dec"), Document::DecoratedBicategory(l.dec().into())));
        out.push((format!("{name}/decoration"), Document::Category(l.dec().decoration().into())));
        out.push((format!("{name}/bicategory"), Document::Bicategory(l.dec().bicat().into())));
        out.push((format!("{name}/phi"), Document::Precosheaf(l.phi().into())));
        for (i, f) in l.phi().fibers().iter().enumerate() {
            out.push((format!("{name}/fiber{i}"), Document::MonoidalCategory(f.into())));
        }
        out.push((format!("{name}/double"), Document::DoubleCategory(DoubleDoc::from(l.double()))));
        match &fx {
            Fixture::Semidirect(s) => {
                out.push((format!("{name}/endo"), Document::Monoid((&s.endo).into())));
                out.push((format!("{name}/semidirect"), Document::Monoid((&s.semidirect).into())));
            }
            Fixture::Graded(g) => {
                out.push((format!("{name}/vertical"), Document::MonoidalCategory((&g.vertical).into())));
                out.push((format!("{name}/twisted"), Document::MonoidalCategory((&g.twisted).into())));
            }
            _ => {}
        }
    }
    out.push(("length2/double".into(), Document::DoubleCategory(DoubleDoc::from(&length_two()?))));
    Ok(out)
}
