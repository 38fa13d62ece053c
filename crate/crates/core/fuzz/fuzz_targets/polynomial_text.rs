#![no_main]

use cliffan::symcalc::{CliffordPolynomial, VariableKind};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for (kind, nparams) in [(VariableKind::Vector, 0), (VariableKind::Unital, 0), (VariableKind::Vector, 2)] {
        if let Ok(p) = CliffordPolynomial::parse(3, kind, nparams, text) {
            let again = CliffordPolynomial::parse(3, kind, nparams, &p.to_text()).expect("printed form parses");
            assert_eq!(again, p);
        }
    }
});
