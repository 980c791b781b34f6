"""Physics of the flux-quantized Sommerfeld atom."""
