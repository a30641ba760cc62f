"""
Services: statistics, power-law model, generation, K tuning and the run pipeline.
"""
