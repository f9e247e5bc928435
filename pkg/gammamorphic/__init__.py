"""Barnes G family: multi-route evaluation and identity verification."""
