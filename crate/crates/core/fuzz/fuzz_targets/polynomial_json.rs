#![no_main]

use cliffan::symcalc::CliffordPolynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = CliffordPolynomial::from_json_str(text) {
        let again = CliffordPolynomial::from_json_str(&p.to_json_string()).expect("serialized form parses");
        assert_eq!(again, p);
    }
});
