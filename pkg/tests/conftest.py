from hypothesis import settings

settings.register_profile("behrend", deadline=None, max_examples=60)
settings.load_profile("behrend")
