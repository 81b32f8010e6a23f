//! Hand-transcribed expected rows, embedded at build time.

pub(super) const SNAPSHOTS: &[(&str, &str)] = &[
    ("table1/I.rho", include_str!("../../snapshots/table1/I.rho.txt")),
    ("table1/I.rho_star", include_str!("../../snapshots/table1/I.rho_star.txt")),
    ("table1/IIIb", include_str!("../../snapshots/table1/IIIb.txt")),
    ("table1/IIa.rho", include_str!("../../snapshots/table1/IIa.rho.txt")),
    ("table1/IIa.rho_star", include_str!("../../snapshots/table1/IIa.rho_star.txt")),
    ("table1/IVc", include_str!("../../snapshots/table1/IVc.txt")),
    ("table1/VIa.rho", include_str!("../../snapshots/table1/VIa.rho.txt")),
    ("table1/VIa.rho_star", include_str!("../../snapshots/table1/VIa.rho_star.txt")),
    ("table1/VIc", include_str!("../../snapshots/table1/VIc.txt")),
    ("table1/VId", include_str!("../../snapshots/table1/VId.txt")),
    ("table1/Va.rho", include_str!("../../snapshots/table1/Va.rho.txt")),
    ("table1/Va.rho_star", include_str!("../../snapshots/table1/Va.rho_star.txt")),
    ("table1/X.rho", include_str!("../../snapshots/table1/X.rho.txt")),
    ("table1/X.rho_star", include_str!("../../snapshots/table1/X.rho_star.txt")),
    ("table1/XIa.rho", include_str!("../../snapshots/table1/XIa.rho.txt")),
    ("table1/XIa.rho_star", include_str!("../../snapshots/table1/XIa.rho_star.txt")),
    ("table1/default", include_str!("../../snapshots/table1/default.txt")),
    ("table3/CuspNonGen", include_str!("../../snapshots/table3/CuspNonGen.txt")),
    ("table3/IIIb-chi1_nu", include_str!("../../snapshots/table3/IIIb-chi1_nu.txt")),
    ("table3/IIIb-chi_sq_1", include_str!("../../snapshots/table3/IIIb-chi_sq_1.txt")),
    ("table3/IIIb", include_str!("../../snapshots/table3/IIIb.txt")),
    ("table3/IIb", include_str!("../../snapshots/table3/IIb.txt")),
    ("table3/IVb", include_str!("../../snapshots/table3/IVb.txt")),
    ("table3/IVc", include_str!("../../snapshots/table3/IVc.txt")),
    ("table3/IVd", include_str!("../../snapshots/table3/IVd.txt")),
    ("table3/IXb", include_str!("../../snapshots/table3/IXb.txt")),
    ("table3/VIIIb", include_str!("../../snapshots/table3/VIIIb.txt")),
    ("table3/VIb", include_str!("../../snapshots/table3/VIb.txt")),
    ("table3/VIc", include_str!("../../snapshots/table3/VIc.txt")),
    ("table3/VId", include_str!("../../snapshots/table3/VId.txt")),
    ("table3/Vb", include_str!("../../snapshots/table3/Vb.txt")),
    ("table3/Vc", include_str!("../../snapshots/table3/Vc.txt")),
    ("table3/Vd", include_str!("../../snapshots/table3/Vd.txt")),
    ("table3/XIb", include_str!("../../snapshots/table3/XIb.txt")),
    ("table4/CuspGen", include_str!("../../snapshots/table4/CuspGen.txt")),
    ("table4/CuspNonGen", include_str!("../../snapshots/table4/CuspNonGen.txt")),
    ("table4/I", include_str!("../../snapshots/table4/I.txt")),
    ("table4/IIIa", include_str!("../../snapshots/table4/IIIa.txt")),
    ("table4/IIIb-chi1_nu", include_str!("../../snapshots/table4/IIIb-chi1_nu.txt")),
    ("table4/IIIb", include_str!("../../snapshots/table4/IIIb.txt")),
    ("table4/IIa", include_str!("../../snapshots/table4/IIa.txt")),
    ("table4/IIb-chi_sq_1", include_str!("../../snapshots/table4/IIb-chi_sq_1.txt")),
    ("table4/IIb", include_str!("../../snapshots/table4/IIb.txt")),
    ("table4/IVa", include_str!("../../snapshots/table4/IVa.txt")),
    ("table4/IVb", include_str!("../../snapshots/table4/IVb.txt")),
    ("table4/IVc", include_str!("../../snapshots/table4/IVc.txt")),
    ("table4/IVd", include_str!("../../snapshots/table4/IVd.txt")),
    ("table4/IXa", include_str!("../../snapshots/table4/IXa.txt")),
    ("table4/IXb", include_str!("../../snapshots/table4/IXb.txt")),
    ("table4/VII", include_str!("../../snapshots/table4/VII.txt")),
    ("table4/VIIIa", include_str!("../../snapshots/table4/VIIIa.txt")),
    ("table4/VIIIb", include_str!("../../snapshots/table4/VIIIb.txt")),
    ("table4/VIa", include_str!("../../snapshots/table4/VIa.txt")),
    ("table4/VIb", include_str!("../../snapshots/table4/VIb.txt")),
    ("table4/VIc", include_str!("../../snapshots/table4/VIc.txt")),
    ("table4/VId", include_str!("../../snapshots/table4/VId.txt")),
    ("table4/Va", include_str!("../../snapshots/table4/Va.txt")),
    ("table4/Vb", include_str!("../../snapshots/table4/Vb.txt")),
    ("table4/Vc", include_str!("../../snapshots/table4/Vc.txt")),
    ("table4/Vd", include_str!("../../snapshots/table4/Vd.txt")),
    ("table4/X", include_str!("../../snapshots/table4/X.txt")),
    ("table4/XIa", include_str!("../../snapshots/table4/XIa.txt")),
    ("table4/XIb", include_str!("../../snapshots/table4/XIb.txt")),
];
