SUCCESS_MESSAGES = {
    "INSTANCE_WRITTEN": "Instance written to {graph} (metadata: {meta}).",
    "QUERIES_WRITTEN": "{count} oracle queries logged to {path}.",
    "VERIFICATION_PASSED": "All {count} checks passed.",
    "GADGET_WRITTEN": "Gadget written to {path}.",
}
