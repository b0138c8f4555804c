#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let from_reader = symedge::read_edge_list(data);
    let from_slice = symedge::parse_edge_list(data);
    assert_eq!(from_reader.is_ok(), from_slice.is_ok());
});
