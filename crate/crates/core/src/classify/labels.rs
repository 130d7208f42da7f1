use std::fmt;

use super::{classify, flat_classify, is_self_dual, CrossingIndexValue, FlatIndexValue};
use crate::diagram::{CrossingId, TangleDiagram};
use crate::error::Result;
use crate::group::{EqualityVerdict, SurfacePresentation};

/// Tribe and phratry labels (1-based, by first occurrence in walk order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub crossings: Vec<CrossingId>,
    pub tribe: Vec<usize>,
    pub phratry: Vec<usize>,
    /// Some comparison that decided this crossing's labels was undecided.
    pub undecided: Vec<bool>,
}

impl Labeling {
    pub fn tribe_of(&self, v: &CrossingId) -> Option<usize> {
        self.crossings.iter().position(|x| x == v).map(|i| self.tribe[i])
    }

    pub fn phratry_of(&self, v: &CrossingId) -> Option<usize> {
        self.crossings.iter().position(|x| x == v).map(|i| self.phratry[i])
    }
}

/// Greedy first-occurrence labeling under a three-valued equivalence.
fn label<T>(items: &[T], mut eq: impl FnMut(&T, &T) -> Result<EqualityVerdict>) -> Result<(Vec<usize>, Vec<bool>)> {
    let mut reps: Vec<usize> = Vec::new();
    let mut labels = Vec::with_capacity(items.len());
    let mut undecided = Vec::with_capacity(items.len());
    for (i, it) in items.iter().enumerate() {
        let mut found = None;
        let mut unsure = false;
        for (l, &r) in reps.iter().enumerate() {
            match eq(&items[r], it)? {
                EqualityVerdict::Equal => {
                    found = Some(l + 1);
                    break;
                }
                EqualityVerdict::NotEqual => {}
                EqualityVerdict::Undecided(_) => unsure = true,
            }
        }
        let l = match found {
            Some(l) => l,
            None => {
                reps.push(i);
                reps.len()
            }
        };
        labels.push(l);
        undecided.push(unsure);
    }
    Ok((labels, undecided))
}

fn combine(tribe: &(Vec<usize>, Vec<bool>), phratry: (Vec<usize>, Vec<bool>), crossings: Vec<CrossingId>) -> Labeling {
    let undecided = tribe.1.iter().zip(&phratry.1).map(|(a, b)| *a || *b).collect();
    Labeling { crossings, tribe: tribe.0.clone(), phratry: phratry.0, undecided }
}

pub fn classical_labeling(d: &TangleDiagram) -> Result<(Labeling, Vec<CrossingIndexValue>)> {
    let ids = d.crossings_in_walk_order();
    let values: Vec<CrossingIndexValue> = ids.iter().map(|v| classify(d, v)).collect::<Result<_>>()?;
    let p = d.surface();
    let tribes = label(&values, |a, b| a.same_tribe(b, p))?;
    let phratries = label(&values, |a, b| a.same_phratry(b, p))?;
    Ok((combine(&tribes, phratries, ids), values))
}

pub fn flat_labeling(d: &TangleDiagram) -> Result<(Labeling, Vec<FlatIndexValue>)> {
    let ids = d.crossings_in_walk_order();
    let values: Vec<FlatIndexValue> = ids.iter().map(|v| flat_classify(d, v)).collect::<Result<_>>()?;
    let p = d.surface();
    let tribes = label(&values, |a, b| a.same_tribe(b, p))?;
    let phratries = label(&values, |a, b| a.same_phratry(b, p))?;
    Ok((combine(&tribes, phratries, ids), values))
}

/// One line of the crossing report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub id: CrossingId,
    pub component_type: (usize, usize),
    pub order: Option<i8>,
    pub sign: Option<i8>,
    pub h: String,
    pub tribe: usize,
    pub phratry: usize,
    pub self_dual: bool,
    pub undecided: bool,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} τ=({},{})", self.id, self.component_type.0 + 1, self.component_type.1 + 1)?;
        if let Some(o) = self.order {
            write!(f, " o={o:+}")?;
        }
        if let Some(s) = self.sign {
            write!(f, " sign={s:+}")?;
        }
        write!(f, " h={} tribe=T{} phratry=P{}", self.h, self.tribe, self.phratry)?;
        if self.self_dual {
            f.write_str("*self-dual")?;
        }
        if self.undecided {
            f.write_str(" undecided")?;
        }
        Ok(())
    }
}

fn render(p: &SurfacePresentation, h: &super::HomotopyValue) -> Result<String> {
    h.render(p)
}

/// Report lines for every crossing in walk order.
pub fn classify_report(d: &TangleDiagram) -> Result<Vec<ReportLine>> {
    let p = d.surface();
    if d.is_flat() {
        let (lab, values) = flat_labeling(d)?;
        lab.crossings
            .iter()
            .zip(&values)
            .enumerate()
            .map(|(i, (id, v))| {
                let [a, b] = d.locate(id)?;
                let closed_self = a.component == b.component && d.component(a.component).is_closed();
                Ok(ReportLine {
                    id: id.clone(),
                    component_type: v.component_type,
                    order: v.refined.order,
                    sign: None,
                    h: render(p, &v.homotopy)?,
                    tribe: lab.tribe[i],
                    phratry: lab.phratry[i],
                    self_dual: closed_self && is_self_dual(d, id)?,
                    undecided: lab.undecided[i],
                })
            })
            .collect()
    } else {
        let (lab, values) = classical_labeling(d)?;
        lab.crossings
            .iter()
            .zip(&values)
            .enumerate()
            .map(|(i, (id, v))| {
                Ok(ReportLine {
                    id: id.clone(),
                    component_type: v.component_type,
                    order: v.order,
                    sign: Some(v.sign),
                    h: render(p, &v.homotopy)?,
                    tribe: lab.tribe[i],
                    phratry: lab.phratry[i],
                    self_dual: false,
                    undecided: lab.undecided[i],
                })
            })
            .collect()
    }
}
