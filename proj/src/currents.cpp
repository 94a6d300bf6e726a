namespace vdlab {}
